# File: file_type.py
# Description: Report format categories.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.


from enum import Enum

class ReportFormat(Enum):
    """
    Enumeration for report formats.

    Reports are JSON; tables for plotting are CSV; coefficient array dumps may also be PBM bitmaps.
    """

    REPORT_FORMAT_UNKNOWN = 'UNKNOWN'

    REPORT_FORMAT_JSON = 'JSON'
    REPORT_FORMAT_CSV = 'CSV'
    REPORT_FORMAT_PBM = 'PBM'

    @staticmethod
    def from_name(name: str) -> 'ReportFormat':
        """
        :param name: str, format name such as 'json', case insensitive
        :return: ReportFormat, REPORT_FORMAT_UNKNOWN if the name is not a format
        """

        for report_format in ReportFormat:
            if report_format.value == name.upper():
                return report_format
        return ReportFormat.REPORT_FORMAT_UNKNOWN
