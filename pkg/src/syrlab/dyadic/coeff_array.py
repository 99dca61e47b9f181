# File: coeff_array.py
# Description: Lazily grown table of the 2-adic digits of -3^(-i).
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging

import numpy as np

from syrlab.dyadic.residue import Dyadic


_logger = logging.getLogger(__name__)


class CoeffArray:
    """
    The coefficient array a_{j,i}: digit j of the 2-adic expansion of -3^(-i), rows i >= 1, columns j >= 0.

    Each row is held as one Python integer whose binary digits, least significant first, are the
    materialized coefficients. All rows share the same width. The width doubles on demand and every
    row is lifted in place, so callers never observe a partial row.

    After freeze() the array is read-only and may be shared with worker processes.
    """

    _initial_width = 64

    def __init__(self, width: int = _initial_width) -> None:
        """
        :param width: int, initial number of materialized columns
        """

        if width < 1:
            raise ValueError('width must be positive')

        self._width = width
        self._rows = dict()
        self._is_frozen = False

    @property
    def width(self) -> int:
        return self._width

    @property
    def rows(self) -> int:
        """
        :return: int, largest materialized row index, 0 if none
        """

        return max(self._rows, default=0)

    @property
    def is_frozen(self) -> bool:
        return self._is_frozen

    def _grow_width(self, min_width: int) -> None:
        new_width = self._width
        while new_width < min_width:
            new_width *= 2

        _logger.debug('growing coefficient array from %d to %d columns over %d rows',
                      self._width, new_width, len(self._rows))

        old_modulus = 1 << self._width
        for i, value in self._rows.items():
            # the stored value is -inverse, so the inverse seeds the lift
            inverse = (-value) % old_modulus
            inverse = Dyadic.hensel_inverse(3 ** i, new_width, seed=inverse, seed_bits=self._width)
            self._rows[i] = (-inverse) % (1 << new_width)

        self._width = new_width

    def _ensure(self, j: int, i: int) -> None:
        if i < 1:
            raise ValueError('row index must be at least 1')
        if j < 0:
            raise ValueError('column index must be nonnegative')

        is_inside = j < self._width and i in self._rows
        if is_inside:
            return
        if self._is_frozen:
            raise ValueError(f'coefficient ({j}, {i}) lies outside the frozen window')

        if j >= self._width:
            self._grow_width(j + 1)
        if i not in self._rows:
            self._rows[i] = Dyadic.neg_inv_pow3_bits(i, self._width).value

    def coeff(self, j: int, i: int) -> int:
        """
        Get a_{j,i}, growing the array when (j, i) is outside the materialized window.

        :param j: int, column, at least 0
        :param i: int, row, at least 1
        :return: int, 0 or 1

        :raises ValueError: if the indices are out of range or the frozen window is exceeded
        """

        self._ensure(j, i)
        return (self._rows[i] >> j) & 1

    def row_value(self, i: int, nbits: int) -> int:
        """
        :param i: int, row
        :param nbits: int, number of low digits
        :return: int, sum of a_{j,i} 2^j over j < nbits
        """

        if nbits <= 0:
            return 0
        self._ensure(nbits - 1, i)
        return self._rows[i] & ((1 << nbits) - 1)

    def window(self, i: int, start: int, width: int) -> int:
        """
        The width-digit window of row i starting at column start, as an integer.

        :param i: int, row
        :param start: int, first column
        :param width: int, number of digits
        :return: int, sum of a_{start+t,i} 2^t over t < width
        """

        if width <= 0:
            return 0
        self._ensure(start + width - 1, i)
        return (self._rows[i] >> start) & ((1 << width) - 1)

    @staticmethod
    def row_period(i: int) -> int:
        """
        Row i is purely periodic with this period.

        :param i: int, row, at least 1
        :return: int, 2 * 3^(i-1)
        """

        if i < 1:
            raise ValueError('row index must be at least 1')
        return 2 * 3 ** (i - 1)

    def freeze(self, width: int, rows: int) -> 'CoeffArray':
        """
        Materialize rows 1..rows to at least width columns and make the array read-only.

        :param width: int, minimum number of columns
        :param rows: int, number of rows
        :return: CoeffArray, self
        """

        if self._is_frozen and (width > self._width or rows > self.rows):
            raise ValueError('frozen array cannot be grown')

        if not self._is_frozen:
            if width > self._width:
                self._grow_width(width)
            for i in range(1, rows + 1):
                if i not in self._rows:
                    self._rows[i] = Dyadic.neg_inv_pow3_bits(i, self._width).value
            self._is_frozen = True
            _logger.debug('froze coefficient array at %d rows, %d columns', rows, self._width)

        return self

    def copy(self) -> 'CoeffArray':
        """
        :return: CoeffArray, a mutable copy with the same materialized rows
        """

        duplicate = CoeffArray(self._width)
        duplicate._rows = dict(self._rows)
        return duplicate

    def window_table(self, i: int, width: int, smax: int) -> np.ndarray:
        """
        Windows of row i for every start column 0..smax.

        :param i: int, row
        :param width: int, window width, at most 62
        :param smax: int, last start column
        :return: np.ndarray, int64 array of length smax + 1
        """

        if not 0 < width <= 62:
            raise ValueError('window width must lie in [1, 62]')

        self._ensure(smax + width - 1, i)
        value = self._rows[i]
        mask = (1 << width) - 1
        table = np.fromiter(((value >> s) & mask for s in range(smax + 1)), dtype=np.int64, count=smax + 1)

        return table

    def bit_table(self, i: int, ncols: int) -> np.ndarray:
        """
        :param i: int, row
        :param ncols: int, number of columns
        :return: np.ndarray, uint8 digits a_{0,i} .. a_{ncols-1,i}
        """

        if ncols <= 0:
            return np.zeros(0, dtype=np.uint8)
        self._ensure(ncols - 1, i)
        value = self._rows[i]
        table = np.fromiter(((value >> j) & 1 for j in range(ncols)), dtype=np.uint8, count=ncols)

        return table

    def dump(self, rows: int, cols: int) -> np.ndarray:
        """
        :param rows: int, number of rows from row 1
        :param cols: int, number of columns from column 0
        :return: np.ndarray, uint8 matrix indexed [i - 1, j]
        """

        matrix = np.zeros((rows, cols), dtype=np.uint8)
        for i in range(1, rows + 1):
            matrix[i - 1] = self.bit_table(i, cols)

        return matrix
