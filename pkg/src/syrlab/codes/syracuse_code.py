# File: syracuse_code.py
# Description: Syracuse codes and their correspondence with odd integers.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Generator

from syrlab.collatz.maps import CollatzMaps
from syrlab.dyadic.residue import Dyadic
from syrlab.errors import InvariantViolation


@dataclass(frozen=True)
class SyracuseCode:
    """
    A finite x-sequence (x_1, ..., x_k) of positive integers.

    Indices follow the 1-based convention: prefix(i) = x_[1,i], suffix(i) = x_[i,k].
    """

    xs: tuple

    def __post_init__(self) -> None:
        xs = tuple(int(x) for x in self.xs)
        if not xs:
            raise ValueError('code must be nonempty')
        if min(xs) < 1:
            raise ValueError('code entries must be positive')
        object.__setattr__(self, 'xs', xs)

    @property
    def k(self) -> int:
        return len(self.xs)

    @cached_property
    def prefix_sums(self) -> tuple:
        """
        :return: tuple, (x_[1,0], x_[1,1], ..., x_[1,k]) starting from 0
        """

        sums = [0]
        for x in self.xs:
            sums.append(sums[-1] + x)
        return tuple(sums)

    @cached_property
    def suffix_sums(self) -> tuple:
        """
        :return: tuple, entry i - 1 is x_[i,k] for i = 1..k, followed by 0
        """

        total = self.prefix_sums[-1]
        return tuple(total - s for s in self.prefix_sums)

    @property
    def n(self) -> int:
        return self.prefix_sums[-1]

    def prefix(self, i: int) -> int:
        """
        :param i: int, 0..k
        :return: int, x_[1,i]
        """

        return self.prefix_sums[i]

    def suffix(self, i: int) -> int:
        """
        :param i: int, 1..k+1
        :return: int, x_[i,k], 0 for i = k + 1
        """

        if i < 1:
            raise IndexError('suffix index starts at 1')
        return self.suffix_sums[i - 1]

    def extended(self, *tail: int) -> 'SyracuseCode':
        return SyracuseCode(self.xs + tuple(tail))

    def __len__(self) -> int:
        return len(self.xs)


class CodeMap:
    """
    Conversions between Syracuse codes and odd integers, and the closed form of Syr^k on a code.
    """

    @staticmethod
    def _as_code(code) -> SyracuseCode:
        if isinstance(code, SyracuseCode):
            return code
        return SyracuseCode(tuple(code))

    @staticmethod
    def code_to_integer_prefixes(code) -> Generator[int, None, None]:
        """
        Yield N(x_1..x_i) for i = 1..k in one pass.

        :param code: SyracuseCode or sequence of positive integers
        :return: Generator, odd integers
        """

        code = CodeMap._as_code(code)
        modulus = 1 << code.n
        inverse_of_three = Dyadic.hensel_inverse(3, code.n)

        power = inverse_of_three
        partial = 0
        for i in range(code.k):
            partial = (partial + power * (1 << code.prefix(i))) % modulus
            power = (power * inverse_of_three) % modulus
            yield (-partial) % (1 << code.prefix(i + 1))

    @staticmethod
    def code_to_integer(code) -> int:
        """
        The odd N < 2^(x_[1,k]) with N = -sum_i 3^(-i-1) 2^(x_[1,i]) mod 2^(x_[1,k]).

        Its x-sequence starts x_1..x_(k-1) and has x_k(N) >= x_k.

        :param code: SyracuseCode or sequence of positive integers
        :return: int, odd
        """

        code = CodeMap._as_code(code)
        *_, value = CodeMap.code_to_integer_prefixes(code)

        return value

    @staticmethod
    def code_to_integer_ext(code) -> int:
        """
        N(x_1, ..., x_k, 1): the odd N < 2^(x_[1,k]+1) whose first k exponents are exactly the code.

        :param code: SyracuseCode or sequence of positive integers
        :return: int, odd
        """

        code = CodeMap._as_code(code)
        return CodeMap.code_to_integer(code.extended(1))

    @staticmethod
    def integer_to_code(n: int, k: int) -> SyracuseCode:
        """
        :param n: int, odd, positive
        :param k: int, at least 1
        :return: SyracuseCode, (x_1(n), ..., x_k(n))
        """

        if n < 1 or n % 2 == 0:
            raise ValueError('N must be odd and positive')

        return SyracuseCode(CollatzMaps.x_seq(n, k))

    @staticmethod
    def syr_k_rational(code, n: int) -> Fraction:
        """
        sum_i 3^(k-i) 2^(-x_[i,k]) + 3^k 2^(-x_[1,k]) n as an exact rational.
        """

        code = CodeMap._as_code(code)
        k = code.k
        value = Fraction(3 ** k * n, 1 << code.n)
        for i in range(1, k + 1):
            value += Fraction(3 ** (k - i), 1 << code.suffix(i))

        return value

    @staticmethod
    def syr_k_closed_form(code) -> int:
        """
        Syr^k(N) for N = N(x, 1) from the closed form, checked against direct iteration.

        :param code: SyracuseCode or sequence
        :return: int, Syr^k(N)

        :raises InvariantViolation: if the value is not an integer or differs from the iterate
        """

        code = CodeMap._as_code(code)
        n = CodeMap.code_to_integer_ext(code)
        value = CodeMap.syr_k_rational(code, n)

        instance = {'code': code.xs, 'N': n}
        if value.denominator != 1:
            raise InvariantViolation('closed form is not an integer', {**instance, 'value': str(value)})

        iterate = CollatzMaps.syr_k(n, code.k)
        if value.numerator != iterate:
            raise InvariantViolation('closed form differs from iteration',
                                     {**instance, 'closed_form': value.numerator, 'iterate': iterate})

        return value.numerator

    @staticmethod
    def verify_eq_2_6_2(code) -> bool:
        """
        Check Col^(x_[1,k]+k)(N) = 3^k 2^(-x_[1,k]) N + sum_j 3^(k-j) 2^(-x_[j,k]) mod 3^k for N = N(x).

        Both sides are also compared exactly.

        :param code: SyracuseCode or sequence
        :return: bool, True

        :raises InvariantViolation: if the congruence fails
        """

        code = CodeMap._as_code(code)
        n = CodeMap.code_to_integer(code)

        value = n
        for _ in range(code.n + code.k):
            value = CollatzMaps.col(value)

        modulus = 3 ** code.k
        exact = CodeMap.syr_k_rational(code, n)
        right = (exact.numerator * pow(exact.denominator, -1, modulus)) % modulus

        if value % modulus != right or exact != value:
            raise InvariantViolation('orbit identity failed mod 3^k', {'code': code.xs, 'N': n, 'col': value})

        return True

    @staticmethod
    def compositions(n: int, k: int, mu=None) -> Generator[tuple, None, None]:
        """
        Ordered compositions of n into k positive parts, lexicographic.

        :param n: int, total
        :param k: int, number of parts
        :param mu: optional rational cap, keeps only prefixes with x_[1,i] <= mu i
        :return: Generator, tuples of length k
        """

        if k < 1 or n < k:
            return

        def _extend(prefix: tuple, used: int):
            i = len(prefix)
            if i == k:
                if used == n:
                    yield prefix
                return
            remaining_parts = k - i - 1
            for x in range(1, n - used - remaining_parts + 1):
                total = used + x
                if mu is not None and total > mu * (i + 1):
                    break
                yield from _extend(prefix + (x,), total)

        yield from _extend((), 0)
