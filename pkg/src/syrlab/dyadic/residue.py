# File: residue.py
# Description: Residue types and the 2-adic primitives for powers of three.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from fractions import Fraction

from syrlab.errors import PrecisionError


@dataclass(frozen=True)
class TruncatedResidue:
    """
    A nonnegative representative modulo 2^modulus_exponent.

    Also used as a truncated 2-adic integer: the low modulus_exponent digits are known, nothing above.
    """

    value: int
    modulus_exponent: int

    def __post_init__(self) -> None:
        if self.modulus_exponent < 0:
            raise ValueError('modulus exponent must be nonnegative')
        if not 0 <= self.value < (1 << self.modulus_exponent):
            raise ValueError('value must lie in [0, 2^m)')

    def bits(self) -> tuple:
        """
        :return: tuple, binary digits least significant first
        """

        return tuple((self.value >> j) & 1 for j in range(self.modulus_exponent))


@dataclass(frozen=True)
class SignedResidue:
    """
    Representative modulo 2^modulus_exponent in the window (-2^(p-1), 2^(p-1)].
    """

    value: int
    modulus_exponent: int

    def __post_init__(self) -> None:
        if self.modulus_exponent < 1:
            raise ValueError('modulus exponent must be positive')
        half = 1 << (self.modulus_exponent - 1)
        if not 1 - half <= self.value <= half:
            raise ValueError('value must lie in (-2^(p-1), 2^(p-1)]')

    def __int__(self) -> int:
        return self.value


class Dyadic:
    """
    Arbitrary-precision 2-adic helpers.
    """

    @staticmethod
    def hensel_inverse(a: int, nbits: int, seed: int = 1, seed_bits: int = 1) -> int:
        """
        Invert an odd integer modulo 2^nbits by Newton doubling.

        :param a: int, odd integer to invert
        :param nbits: int, target precision in bits
        :param seed: int, inverse already known modulo 2^seed_bits
        :param seed_bits: int, precision of the seed
        :return: int, the inverse of a in [0, 2^nbits)

        :raises ValueError: if a is even or nbits is not positive
        """

        if a % 2 == 0:
            raise ValueError('only odd integers are invertible modulo powers of two')
        if nbits < 1:
            raise ValueError('number of bits must be positive')

        inverse = seed
        precision = max(1, seed_bits)
        while precision < nbits:
            precision = min(2 * precision, nbits)
            modulus = 1 << precision
            inverse = (inverse * (2 - a * inverse)) % modulus

        return inverse % (1 << nbits)

    @staticmethod
    def neg_inv_pow3_bits(i: int, nbits: int) -> TruncatedResidue:
        """
        Truncation of the 2-adic expansion of -3^(-i).

        :param i: int, row index, at least 1
        :param nbits: int, number of digits, at least 1
        :return: TruncatedResidue, r < 2^nbits with 3^i r = -1 mod 2^nbits

        :raises ValueError: if i or nbits is not positive
        """

        if i < 1:
            raise ValueError('row index must be at least 1')
        if nbits < 1:
            raise ValueError('number of bits must be positive')

        inverse = Dyadic.hensel_inverse(3 ** i, nbits)
        value = (-inverse) % (1 << nbits)

        return TruncatedResidue(value, nbits)

    @staticmethod
    def c_k(k: int) -> int:
        """
        The constant c_k = (2^k - (-1)^k) / 3.

        :param k: int, at least 1
        :return: int, c_k

        :raises ValueError: if k is not positive
        """

        if k < 1:
            raise ValueError('k must be at least 1')

        return ((1 << k) - (-1) ** k) // 3

    @staticmethod
    def c_k_alternating(k: int) -> int:
        """
        c_k by the explicit sums: 1 - 2 + 4 - ... + 2^(k-1) for odd k, 1 + 4 + ... + 4^(k/2-1) for even k.

        :param k: int, at least 1
        :return: int, c_k
        """

        if k < 1:
            raise ValueError('k must be at least 1')

        if k % 2:
            explicit_sum = sum((-1) ** j * (1 << j) for j in range(k))
        else:
            explicit_sum = sum(4 ** j for j in range(k // 2))

        return explicit_sum

    @staticmethod
    def residue(y, m: int) -> TruncatedResidue:
        """
        Canonical representative of y modulo 2^m.

        :param y: int, Fraction with odd denominator, or TruncatedResidue
        :param m: int, exponent, at least 1
        :return: TruncatedResidue, value in [0, 2^m)

        :raises ValueError: if m is not positive or y has an even denominator
        :raises PrecisionError: if y is a truncation narrower than m
        :raises TypeError: if y has an unsupported type
        """

        if m < 1:
            raise ValueError('exponent must be at least 1')

        modulus = 1 << m
        if isinstance(y, TruncatedResidue):
            if y.modulus_exponent < m:
                raise PrecisionError(f'truncation of width {y.modulus_exponent} cannot give {m} digits')
            value = y.value % modulus
        elif isinstance(y, bool):
            raise TypeError('boolean is not a 2-adic value')
        elif isinstance(y, int):
            value = y % modulus
        elif isinstance(y, Fraction):
            if y.denominator % 2 == 0:
                raise ValueError('denominator must be odd')
            value = (y.numerator * pow(y.denominator, -1, modulus)) % modulus
        else:
            raise TypeError('unsupported 2-adic value')

        return TruncatedResidue(value, m)

    @staticmethod
    def signed_residue(m: int, p: int) -> SignedResidue:
        """
        The representative of m modulo 2^p in (-2^(p-1), 2^(p-1)].

        :param m: int, integer to reduce
        :param p: int, exponent, at least 1
        :return: SignedResidue
        """

        if p < 1:
            raise ValueError('exponent must be at least 1')

        modulus = 1 << p
        value = m % modulus
        if value > modulus >> 1:
            value -= modulus

        return SignedResidue(value, p)
