# File: maps.py
# Description: Collatz and Syracuse maps, x-sequences and stopping times.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass

from syrlab.errors import InvariantViolation


@dataclass(frozen=True)
class OrbitRecord:
    """
    Bookkeeping for k Syracuse steps from an odd start.

    syr_iterates[0] is the start; syr_iterates[i] = Syr^i(start). x_seq[i - 1] = x_i(start).
    """

    start: int
    syr_iterates: tuple
    x_seq: tuple
    col_step_count: int

    @property
    def k(self) -> int:
        return len(self.x_seq)


class CollatzMaps:
    """
    The Collatz map and its odd-to-odd acceleration on arbitrary integers.
    """

    @staticmethod
    def _two_valuation(n: int) -> int:
        return (n & -n).bit_length() - 1

    @staticmethod
    def col(n: int) -> int:
        """
        :param n: int
        :return: int, 3n + 1 if n is odd, n / 2 otherwise
        """

        if n % 2:
            return 3 * n + 1
        return n // 2

    @staticmethod
    def syr_step(n: int) -> tuple:
        """
        One Syracuse step on an odd integer.

        :param n: int, odd
        :return: tuple, (Syr(n), x) with 3n + 1 = 2^x Syr(n)
        """

        v = 3 * n + 1
        x = CollatzMaps._two_valuation(v)
        return v >> x, x

    @staticmethod
    def syr(n: int) -> int:
        """
        The next odd iterate. Even inputs are first stripped of their factors of two.

        :param n: int, nonzero
        :return: int, odd, with the sign of n

        :raises ValueError: if n is zero
        """

        if n == 0:
            raise ValueError('Syracuse map is undefined at 0')

        odd_part = n >> CollatzMaps._two_valuation(n)
        next_odd, _ = CollatzMaps.syr_step(odd_part)

        return next_odd

    @staticmethod
    def syr_k(n: int, k: int) -> int:
        """
        :param n: int, nonzero
        :param k: int, number of steps, at least 0
        :return: int, Syr^k(n); Syr^0 is the identity
        """

        if n == 0:
            raise ValueError('Syracuse map is undefined at 0')
        if k < 0:
            raise ValueError('step count must be nonnegative')

        value = n
        for _ in range(k):
            value = CollatzMaps.syr(value)

        return value

    @staticmethod
    def x_seq(n: int, k: int) -> tuple:
        """
        :param n: int, odd and nonzero
        :param k: int, at least 1
        :return: tuple, (x_1(n), ..., x_k(n))

        :raises ValueError: if n is even or k is not positive
        """

        return CollatzMaps.orbit_record(n, k).x_seq

    @staticmethod
    def orbit_record(n: int, k: int) -> OrbitRecord:
        """
        Run k Syracuse steps and keep the iterates and exponents.

        :param n: int, odd and nonzero
        :param k: int, at least 1
        :return: OrbitRecord
        """

        if n % 2 == 0:
            raise ValueError('start must be odd')
        if k < 1:
            raise ValueError('step count must be at least 1')

        iterates = [n]
        xs = []
        value = n
        for _ in range(k):
            value, x = CollatzMaps.syr_step(value)
            iterates.append(value)
            xs.append(x)

        record = OrbitRecord(start=n, syr_iterates=tuple(iterates), x_seq=tuple(xs), col_step_count=sum(xs) + k)
        return record

    @staticmethod
    def verify_composition_law(record: OrbitRecord) -> bool:
        """
        Check Col^(x_[1,k] + k)(start) = Syr^k(start) by running the Collatz map.

        :param record: OrbitRecord
        :return: bool, True when the law holds

        :raises InvariantViolation: if it does not
        """

        value = record.start
        for _ in range(record.col_step_count):
            value = CollatzMaps.col(value)

        if value != record.syr_iterates[-1]:
            raise InvariantViolation('composition law failed',
                                     {'start': record.start, 'k': record.k, 'col': value,
                                      'syr': record.syr_iterates[-1]})
        return True

    @staticmethod
    def stopping_time(n: int, bound: int):
        """
        First k with Syr^k(n) < n.

        :param n: int, odd, at least 3
        :param bound: int, maximum number of steps
        :return: int or None, None when no descent occurs within bound steps
        """

        if n < 3 or n % 2 == 0:
            raise ValueError('start must be odd and at least 3')

        value = n
        for k in range(1, bound + 1):
            value, _ = CollatzMaps.syr_step(value)
            if value < n:
                return k

        return None

    @staticmethod
    def coeff_stopping_time(n: int, bound: int):
        """
        First k with 3^k < 2^(x_[1,k](n)).

        :param n: int, odd, at least 3
        :param bound: int, maximum number of steps
        :return: int or None
        """

        if n < 3 or n % 2 == 0:
            raise ValueError('start must be odd and at least 3')

        value = n
        power_of_three = 1
        exponent_sum = 0
        for k in range(1, bound + 1):
            value, x = CollatzMaps.syr_step(value)
            power_of_three *= 3
            exponent_sum += x
            if power_of_three < (1 << exponent_sum):
                return k

        return None

    @staticmethod
    def negative_cycles() -> dict:
        """
        The three known cycles of Syr on negative integers, keyed by their largest element.

        :return: dict, start -> {'orbit': tuple, 'x_word': tuple}
        """

        cycles = dict()
        for start in (-1, -5, -17):
            orbit = [start]
            xs = []
            value, x = CollatzMaps.syr_step(start)
            xs.append(x)
            while value != start:
                orbit.append(value)
                value, x = CollatzMaps.syr_step(value)
                xs.append(x)
            cycles[start] = {'orbit': tuple(orbit), 'x_word': tuple(xs)}

        return cycles
