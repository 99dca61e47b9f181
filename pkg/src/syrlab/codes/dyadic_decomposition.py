# File: dyadic_decomposition.py
# Description: Bounded integers A and A1 in the dyadic form of Syr^k on a code.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from typing import Optional

from syrlab.codes.syracuse_code import CodeMap, SyracuseCode
from syrlab.collatz.maps import CollatzMaps
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.dyadic.residue import Dyadic
from syrlab.errors import InvariantViolation


@dataclass(frozen=True)
class DyadicDecomposition:
    """
    Per-instance values of the bounded integers in the dyadic decomposition.

    A satisfies N(x) = sum_i {-3^(-i-1)}_(x_[i+1,k]) 2^(x_[1,i]) - A 2^(x_[1,k]) with 0 <= A <= k.
    A1 satisfies Syr^k(N) = 3^k (1 - T - A1) for N = N(x, 1), T = sum_i sum_m a_(m+x_[i,k],i) 2^m,
    with -k <= A1 <= 2k + 2. A1 and p_window are None when only A was extracted.
    """

    code: tuple
    N: int
    A: int
    A1: Optional[int] = None
    p_window: Optional[int] = None

    @property
    def k(self) -> int:
        return len(self.code)


class DyadicDecompositionService:
    """
    Exact extraction of A and recovery of A1.
    """

    @staticmethod
    def _truncated(array: Optional[CoeffArray], i: int, nbits: int) -> int:
        if array is None:
            return Dyadic.neg_inv_pow3_bits(i, nbits).value
        return array.row_value(i, nbits)

    @staticmethod
    def extract_A(code, array: CoeffArray = None) -> DyadicDecomposition:
        """
        Compute A for N = N(x) exactly and check 0 <= A <= k.

        :param code: SyracuseCode or sequence
        :param array: CoeffArray, optional source of the truncated expansions
        :return: DyadicDecomposition

        :raises InvariantViolation: if A falls outside [0, k]
        """

        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        n = CodeMap.code_to_integer(code)

        total = 0
        for i in range(code.k):
            total += DyadicDecompositionService._truncated(array, i + 1, code.suffix(i + 1)) << code.prefix(i)

        a_value, remainder = divmod(total - n, 1 << code.n)
        if remainder or not 0 <= a_value <= code.k:
            raise InvariantViolation('A outside [0, k]', {'code': code.xs, 'N': n, 'A': a_value})

        return DyadicDecomposition(code=code.xs, N=n, A=a_value)

    @staticmethod
    def tail_sum(code, p: int, array: CoeffArray = None) -> int:
        """
        T truncated to p digits: sum_i sum_(m<p) a_(m+x_[i,k],i) 2^m reduced mod 2^p.
        """

        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        total = 0
        for i in range(1, code.k + 1):
            start = code.suffix(i)
            if array is None:
                window = Dyadic.neg_inv_pow3_bits(i, start + p).value >> start
            else:
                window = array.window(i, start, p)
            total += window

        return total % (1 << p)

    @staticmethod
    def verify_thm_2_10(code, p: int, array: CoeffArray = None) -> DyadicDecomposition:
        """
        Recover A1 modulo 2^p from Syr^k(N) and the truncated coefficient sum, pin it in [-k, 2k + 2],
        and cross-check it against A1 = 1 - e + A(x), where N(x, 1) = N(x) + e 2^(x_[1,k]).

        :param code: SyracuseCode or sequence
        :param p: int, with 2^p > 3k + 3
        :param array: CoeffArray, optional
        :return: DyadicDecomposition, with A1 and p_window set

        :raises ValueError: if 2^p does not exceed 3k + 3
        :raises InvariantViolation: if A1 has no representative in the window or the two values differ
        """

        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        k = code.k
        if (1 << p) <= 3 * k + 3:
            raise ValueError('2^p must exceed 3k + 3 to pin A1')

        decomposition = DyadicDecompositionService.extract_A(code, array)
        n_ext = CodeMap.code_to_integer_ext(code)
        y = CollatzMaps.syr_k(n_ext, k)

        modulus = 1 << p
        tail = DyadicDecompositionService.tail_sum(code, p, array)
        inverse = pow(3 ** k, -1, modulus)
        residue = (1 - tail - y * inverse) % modulus
        a1_recovered = -k + (residue + k) % modulus

        instance = {'code': code.xs, 'N': n_ext, 'p': p}
        if a1_recovered > 2 * k + 2:
            raise InvariantViolation('A1 has no representative in [-k, 2k + 2]',
                                     {**instance, 'residue': residue})

        extension_bit = (n_ext - decomposition.N) >> code.n
        a1_structural = 1 - extension_bit + decomposition.A
        if a1_structural != a1_recovered:
            raise InvariantViolation('recovered A1 differs from 1 - e + A',
                                     {**instance, 'recovered': a1_recovered, 'structural': a1_structural})

        return DyadicDecomposition(code=code.xs, N=n_ext, A=decomposition.A, A1=a1_recovered, p_window=p)
