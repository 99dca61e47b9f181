# File: json_handler.py
# Description: JavaScript Object Notation (JSON) report handler methods.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import json
import os
from enum import Enum
from fractions import Fraction

import numpy as np

from syrlab.output.file_type import ReportFormat


def to_jsonable(value):
    """
    Convert report values to JSON types: rationals become 'p/q' strings, complex numbers {re, im}
    objects, tuples and arrays lists, numpy scalars Python scalars.

    :param value: report value
    :return: JSON-ready value
    """

    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': float(value.real), 'im': float(value.imag)}
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, Enum):
        return value.value

    return value


class JsonHandler:
    """
    A class to handle JavaScript Object Notation (JSON) reports.
    """

    _file_extension_map = {
        '.json': [ReportFormat.REPORT_FORMAT_JSON]
    }

    @staticmethod
    def get_file_extension_map() -> dict:
        """
        Get the file extension map.
        :return: dict, dictionary of file extension and a list of associated report formats.
        """

        return JsonHandler._file_extension_map

    @staticmethod
    def get_file_type_from_extension(file_extension: str) -> list:
        """
        :param file_extension: str, file extension
        :return: list, report formats for the extension, REPORT_FORMAT_UNKNOWN if none
        """

        return JsonHandler._file_extension_map.get(file_extension.lower(), [ReportFormat.REPORT_FORMAT_UNKNOWN])

    @staticmethod
    def is_json_format(file_path: str) -> bool:
        """
        Determine if the file content is JSON.

        :param file_path: str, path to the file
        :return: bool, True if the content parses as JSON

        :raises FileNotFoundError: If the file is not found.
        """

        if not os.path.isfile(file_path):
            raise FileNotFoundError('file not found')

        try:
            with open(file_path, 'r') as file_handle:
                json.load(file_handle)
            is_json_format = True
        except (json.JSONDecodeError, UnicodeDecodeError):
            is_json_format = False

        return is_json_format

    @staticmethod
    def canonical_dumps(report) -> str:
        """
        Byte-stable text of a report: sorted keys, fixed separators.
        """

        return json.dumps(to_jsonable(report), sort_keys=True, separators=(',', ':'))

    @staticmethod
    def dumps(report) -> str:
        return json.dumps(to_jsonable(report), sort_keys=True, indent=2) + '\n'

    @staticmethod
    def write(report: dict, file_path: str) -> str:
        """
        :param report: dict, report body
        :param file_path: str, destination
        :return: str, file_path
        """

        with open(file_path, 'w') as file_handle:
            file_handle.write(JsonHandler.dumps(report))

        return file_path

    @staticmethod
    def read(file_path: str) -> dict:
        """
        :raises FileNotFoundError: If the file is not found.
        :raises TypeError: If the file is not JSON.
        """

        if not JsonHandler.is_json_format(file_path):
            raise TypeError('file not in JSON format')

        with open(file_path, 'r') as file_handle:
            return json.load(file_handle)
