# File: test_csv_handler.py
# Description: Unit tests for the CsvHandler class.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from fractions import Fraction
import os
import pytest
import tempfile

from syrlab.output.file_type import ReportFormat
from syrlab.output.handler.csv_handler import CsvHandler


ROWS = [{'m': 0, 'mass': Fraction(2, 3), 'stderr': None}, {'m': 1, 'mass': Fraction(1, 3), 'stderr': None}]

@pytest.mark.parametrize("file_extension, expected_report_format", [
    (".csv", [ReportFormat.REPORT_FORMAT_CSV]),
    (".Csv", [ReportFormat.REPORT_FORMAT_CSV]),
    (".json", [ReportFormat.REPORT_FORMAT_UNKNOWN]),
])
def test_get_file_type_from_extension(file_extension, expected_report_format):
    """
    Test the get_file_type_from_extension method.
    """
    assert CsvHandler.get_file_type_from_extension(file_extension) == expected_report_format
    assert CsvHandler.get_file_extension_map() == {'.csv': [ReportFormat.REPORT_FORMAT_CSV]}

def test_dumps():
    """
    Test the dumps method.
    """
    assert CsvHandler.dumps(ROWS) == 'm,mass,stderr\r\n0,2/3,\r\n1,1/3,\r\n'

def test_dumps_columns():
    """
    Test that dumps follows the given column order and drops other keys.
    """
    assert CsvHandler.dumps(ROWS, columns=['mass', 'm']) == 'mass,m\r\n2/3,0\r\n1/3,1\r\n'
    assert CsvHandler.dumps([], columns=['t']) == 't\r\n'

def test_dumps_raise_empty():
    """
    Test the dumps method without rows and columns.
    """
    with pytest.raises(ValueError):
        CsvHandler.dumps([])

def test_write():
    """
    Test the write and is_csv_format methods.
    """
    with tempfile.NamedTemporaryFile(suffix='.csv', delete=False) as temp_file:
        temp_file_path = temp_file.name

    try:
        assert CsvHandler.write(ROWS, temp_file_path) == temp_file_path
        assert CsvHandler.is_csv_format(temp_file_path)
        with open(temp_file_path, 'r', newline='') as file_handle:
            assert file_handle.read() == CsvHandler.dumps(ROWS)
    finally:
        os.remove(temp_file_path)

def test_is_csv_format_ragged():
    """
    Test the is_csv_format method on rows of different lengths.
    """
    with tempfile.NamedTemporaryFile('w', suffix='.csv', delete=False) as temp_file:
        temp_file.write('a,b\n1\n')
        temp_file_path = temp_file.name

    try:
        assert not CsvHandler.is_csv_format(temp_file_path)
    finally:
        os.remove(temp_file_path)

def test_is_csv_format_raise_file_not_found():
    """
    Test the is_csv_format method when the file is not found.
    """
    with pytest.raises(FileNotFoundError):
        CsvHandler.is_csv_format(os.path.join(tempfile.gettempdir(), 'not_found_table.csv'))
