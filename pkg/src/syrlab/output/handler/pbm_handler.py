# File: pbm_handler.py
# Description: Portable bitmap (PBM) handler methods for coefficient array dumps.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.


import os

import numpy as np

from syrlab.output.file_type import ReportFormat


class PbmHandler:
    """
    A class to handle plain portable bitmap (PBM, P1) files.
    """

    _file_extension_map = {
        '.pbm': [ReportFormat.REPORT_FORMAT_PBM]
    }

    @staticmethod
    def get_file_extension_map() -> dict:
        """
        Get the file extension map.
        :return: dict, dictionary of file extension and a list of associated report formats.
        """

        return PbmHandler._file_extension_map

    @staticmethod
    def get_file_type_from_extension(file_extension: str) -> list:
        return PbmHandler._file_extension_map.get(file_extension.lower(), [ReportFormat.REPORT_FORMAT_UNKNOWN])

    @staticmethod
    def is_pbm_format(file_path: str) -> bool:
        """
        :raises FileNotFoundError: If the file is not found.
        """

        if not os.path.isfile(file_path):
            raise FileNotFoundError('file not found')

        with open(file_path, 'rb') as file_handle:
            header = file_handle.read(2)

        return header == b'P1'

    @staticmethod
    def write(matrix: np.ndarray, file_path: str) -> str:
        """
        Write a 0/1 matrix, row i of the file being row i of the matrix; 1 is black.

        :param matrix: np.ndarray, two-dimensional, entries 0 or 1
        :param file_path: str, destination
        :return: str, file_path

        :raises ValueError: if the matrix is not two-dimensional 0/1
        """

        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or not np.isin(matrix, (0, 1)).all():
            raise ValueError('matrix must be two-dimensional with 0/1 entries')

        rows, cols = matrix.shape
        with open(file_path, 'w') as file_handle:
            file_handle.write(f'P1\n{cols} {rows}\n')
            for row in matrix:
                file_handle.write(' '.join(str(int(bit)) for bit in row))
                file_handle.write('\n')

        return file_path

    @staticmethod
    def read(file_path: str) -> np.ndarray:
        """
        :raises TypeError: If the file is not PBM.
        """

        if not PbmHandler.is_pbm_format(file_path):
            raise TypeError('file not in PBM format')

        with open(file_path, 'r') as file_handle:
            tokens = [line.split('#', 1)[0] for line in file_handle]
        values = ' '.join(tokens).split()
        cols, rows = int(values[1]), int(values[2])
        bits = np.array([int(value) for value in values[3:3 + rows * cols]], dtype=np.uint8)

        return bits.reshape(rows, cols)
