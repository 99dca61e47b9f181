# File: csv_handler.py
# Description: Comma-separated values (CSV) table handler methods.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import csv
import io
import os

from syrlab.output.file_type import ReportFormat
from syrlab.output.handler.json_handler import to_jsonable


class CsvHandler:
    """
    A class to handle comma-separated values (CSV) tables of plot data.
    """

    _file_extension_map = {
        '.csv': [ReportFormat.REPORT_FORMAT_CSV]
    }

    @staticmethod
    def get_file_extension_map() -> dict:
        """
        Get the file extension map.
        :return: dict, dictionary of file extension and a list of associated report formats.
        """

        return CsvHandler._file_extension_map

    @staticmethod
    def get_file_type_from_extension(file_extension: str) -> list:
        return CsvHandler._file_extension_map.get(file_extension.lower(), [ReportFormat.REPORT_FORMAT_UNKNOWN])

    @staticmethod
    def is_csv_format(file_path: str) -> bool:
        """
        A file is taken as CSV when it has a header line and every row has the header's column count.

        :raises FileNotFoundError: If the file is not found.
        """

        if not os.path.isfile(file_path):
            raise FileNotFoundError('file not found')

        try:
            with open(file_path, 'r', newline='') as file_handle:
                rows = list(csv.reader(file_handle))
        except (csv.Error, UnicodeDecodeError):
            return False

        return len(rows) > 0 and len(rows[0]) > 0 and all(len(row) == len(rows[0]) for row in rows)

    @staticmethod
    def _write_rows(file_handle, rows: list, columns: list = None) -> None:
        if not rows and not columns:
            raise ValueError('rows or columns must be given')
        columns = list(columns or rows[0].keys())

        writer = csv.DictWriter(file_handle, fieldnames=columns, extrasaction='ignore')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: to_jsonable(row.get(key)) for key in columns})

    @staticmethod
    def dumps(rows: list, columns: list = None) -> str:
        buffer = io.StringIO(newline='')
        CsvHandler._write_rows(buffer, rows, columns)
        return buffer.getvalue()

    @staticmethod
    def write(rows: list, file_path: str, columns: list = None) -> str:
        """
        :param rows: list, one dict per row
        :param file_path: str, destination
        :param columns: list, column order, the keys of the first row by default
        :return: str, file_path

        :raises ValueError: if there are no rows and no columns
        """

        with open(file_path, 'w', newline='') as file_handle:
            CsvHandler._write_rows(file_handle, rows, columns)

        return file_path
