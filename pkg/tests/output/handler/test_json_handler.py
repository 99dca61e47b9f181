# File: test_json_handler.py
# Description: Unit tests for the JsonHandler class and the to_jsonable function.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from fractions import Fraction
import json
import os
import numpy as np
import pytest
import tempfile

from syrlab.output.file_type import ReportFormat
from syrlab.output.handler.json_handler import JsonHandler, to_jsonable


def test_get_file_extension_map():
    """
    Test the get_file_extension_map method.
    """
    assert JsonHandler.get_file_extension_map() == {'.json': [ReportFormat.REPORT_FORMAT_JSON]}

@pytest.mark.parametrize("file_extension, expected_report_format", [
    (".json", [ReportFormat.REPORT_FORMAT_JSON]),
    (".JSON", [ReportFormat.REPORT_FORMAT_JSON]),
    (".csv", [ReportFormat.REPORT_FORMAT_UNKNOWN]),
])
def test_get_file_type_from_extension(file_extension, expected_report_format):
    """
    Test the get_file_type_from_extension method.
    """
    assert JsonHandler.get_file_type_from_extension(file_extension) == expected_report_format

@pytest.mark.parametrize("value, expected_value", [
    (Fraction(2, 3), '2/3'),
    (Fraction(4), '4'),
    (1 - 2j, {'re': 1.0, 'im': -2.0}),
    (np.complex128(0.5j), {'re': 0.0, 'im': 0.5}),
    (np.int64(7), 7),
    (np.float64(0.25), 0.25),
    (np.bool_(True), True),
    ((1, Fraction(1, 2)), [1, '1/2']),
    (np.array([1, 0], dtype=np.uint8), [1, 0]),
    ({1: Fraction(1, 3)}, {'1': '1/3'}),
    (ReportFormat.REPORT_FORMAT_CSV, 'CSV'),
    ('text', 'text'),
    (None, None),
])
def test_to_jsonable(value, expected_value):
    """
    Test the to_jsonable function.
    """
    assert to_jsonable(value) == expected_value

def test_canonical_dumps():
    """
    Test that canonical_dumps is independent of key order.
    """
    first = JsonHandler.canonical_dumps({'b': Fraction(1, 2), 'a': [1, 2]})
    second = JsonHandler.canonical_dumps({'a': (1, 2), 'b': Fraction(1, 2)})
    assert first == second == '{"a":[1,2],"b":"1/2"}'

def test_write_and_read():
    """
    Test the write and read methods.
    """
    with tempfile.NamedTemporaryFile(suffix='.json', delete=False) as temp_file:
        temp_file_path = temp_file.name

    try:
        assert JsonHandler.write({'mass': [Fraction(2, 3), Fraction(1, 3)]}, temp_file_path) == temp_file_path
        assert JsonHandler.is_json_format(temp_file_path)
        assert JsonHandler.read(temp_file_path) == {'mass': ['2/3', '1/3']}
        with open(temp_file_path, 'r') as file_handle:
            assert file_handle.read() == JsonHandler.dumps({'mass': [Fraction(2, 3), Fraction(1, 3)]})
    finally:
        os.remove(temp_file_path)

def test_dumps():
    """
    Test that dumps is indented JSON ending in a newline.
    """
    text = JsonHandler.dumps({'k': 3})
    assert text.endswith('\n')
    assert json.loads(text) == {'k': 3}

def test_read_raise_not_json():
    """
    Test the read method when the file is not JSON.
    """
    with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as temp_file:
        temp_file.write('k = 3\n')
        temp_file_path = temp_file.name

    try:
        assert not JsonHandler.is_json_format(temp_file_path)
        with pytest.raises(TypeError):
            JsonHandler.read(temp_file_path)
    finally:
        os.remove(temp_file_path)

def test_is_json_format_raise_file_not_found():
    """
    Test the is_json_format method when the file is not found.
    """
    with pytest.raises(FileNotFoundError):
        JsonHandler.is_json_format(os.path.join(tempfile.gettempdir(), 'not_found_report.json'))
