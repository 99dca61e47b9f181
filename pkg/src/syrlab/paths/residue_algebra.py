# File: residue_algebra.py
# Description: Windows of a coefficient row, their digit split and the constancy conditions on them.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass

from syrlab.codes.syracuse_code import SyracuseCode
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.dyadic.residue import Dyadic
from syrlab.errors import InvariantViolation
from syrlab.spectral.segments import SegmentDecomposition


@dataclass(frozen=True)
class TriangleWindow:
    """
    Anchor (n, ell) of the windows m(j + n, ell), with the probe indices j1 < j2 <= n' < n''.
    """

    n: int
    ell: int
    M: int = 2
    nprime: int = 3
    ndoubleprime: int = 6
    j1: int = 1
    j2: int = 2

    def __post_init__(self) -> None:
        if self.n < 0 or self.ell < 1 or self.M < 1:
            raise ValueError('need n >= 0, ell >= 1 and M >= 1')
        if not 1 <= self.j1 < self.j2 <= self.nprime < self.ndoubleprime:
            raise ValueError('need 1 <= j1 < j2 <= nprime < ndoubleprime')


@dataclass(frozen=True)
class XiSplit:
    """
    xi = xi1 + 2^n' xi2 + 2^(p - 1 - n'') xi4.
    """

    xi: int
    p: int
    nprime: int
    ndoubleprime: int
    xi1: int
    xi2: int
    xi4: int

    @property
    def xi3(self) -> int:
        return self.xi1 + (self.xi2 << self.nprime)

    def recompose(self) -> int:
        return self.xi3 + (self.xi4 << (self.p - 1 - self.ndoubleprime))


class ResidueAlgebra:
    """
    Operations on the p-digit windows m(j + n, ell) of row ell.
    """

    @staticmethod
    def centered(m: int, p: int) -> int:
        """
        :return: int, the representative of m modulo 2^p in [1 - 2^(p-1), 2^(p-1)]
        """

        return int(Dyadic.signed_residue(m, p))

    @staticmethod
    def m_of(array: CoeffArray, j: int, n: int, ell: int, p: int) -> int:
        """
        :return: int, sum of a_(i+n+j, ell) 2^i over i < p
        """

        if j < 0:
            raise ValueError('j must be nonnegative')
        return array.window(ell, n + j, p)

    @staticmethod
    def decompose_m(array: CoeffArray, j: int, n: int, ell: int, p: int, nprime: int) -> dict:
        """
        m(j + n, ell) = b(j, n') + 2^(n'-j) d + 2^(p-j) c(j).

        b holds the digits in columns n + j .. n + n' - 1, d the digits n + n' .. n + p - 1 and c(j)
        the j digits from column n + p.

        :return: dict, b, d, c, m

        :raises ValueError: unless 1 <= j <= n' < p
        :raises InvariantViolation: if the parts do not recompose m or break their bounds
        """

        if not 1 <= j <= nprime < p:
            raise ValueError('need 1 <= j <= nprime < p')

        b = array.window(ell, n + j, nprime - j)
        d = array.window(ell, n + nprime, p - nprime)
        c = array.window(ell, n + p, j)
        m = ResidueAlgebra.m_of(array, j, n, ell, p)

        parts = {'b': b, 'd': d, 'c': c, 'm': m}
        if b + (d << (nprime - j)) + (c << (p - j)) != m or b >= 1 << (nprime - j) or c >= 1 << j:
            raise InvariantViolation('window split does not recompose', dict(parts, j=j, n=n, ell=ell, p=p))

        return parts

    @staticmethod
    def f_g(array: CoeffArray, j1: int, j2: int, nprime: int, n: int, ell: int, p: int) -> dict:
        """
        f and g with
        (2^(n'-j2) - 1)(m(j1) - m(n')) - (2^(n'-j1) - 1)(m(j2) - m(n')) = f + 2^(p-n') g,
        writing m(j) for m(j + n, ell).

        Checks that identity, the two expressions for g and |f| < 2^(2n' - j1 - j2).

        :return: dict, f, g, lhs

        :raises ValueError: unless 1 <= j1 < j2 <= n' < p
        :raises InvariantViolation: if a check fails
        """

        if not 1 <= j1 < j2 <= nprime:
            raise ValueError('need 1 <= j1 < j2 <= nprime')

        first = ResidueAlgebra.decompose_m(array, j1, n, ell, p, nprime)
        second = ResidueAlgebra.decompose_m(array, j2, n, ell, p, nprime)
        last = ResidueAlgebra.decompose_m(array, nprime, n, ell, p, nprime)

        factor1 = (1 << (nprime - j2)) - 1
        factor2 = (1 << (nprime - j1)) - 1
        f = factor1 * first['b'] - factor2 * second['b']
        g = (factor1 * ((first['c'] << (nprime - j1)) - last['c'])
             - factor2 * ((second['c'] << (nprime - j2)) - last['c']))
        g_expanded = (((first['c'] - second['c']) << (2 * nprime - j1 - j2))
                      + (second['c'] << (nprime - j2)) - (first['c'] << (nprime - j1))
                      + ((1 << (nprime - j1)) - (1 << (nprime - j2))) * last['c'])
        lhs = factor1 * (first['m'] - last['m']) - factor2 * (second['m'] - last['m'])

        instance = {'j1': j1, 'j2': j2, 'nprime': nprime, 'n': n, 'ell': ell, 'p': p, 'f': f, 'g': g}
        if lhs != f + (g << (p - nprime)):
            raise InvariantViolation('f + 2^(p-n\') g differs from the window combination', instance)
        if g != g_expanded:
            raise InvariantViolation('expanded form of g disagrees', instance)
        if abs(f) >= 1 << (2 * nprime - j1 - j2):
            raise InvariantViolation('|f| bound failed', instance)

        return {'f': f, 'g': g, 'lhs': lhs}

    @staticmethod
    def f_g_special_case(array: CoeffArray, n: int, ell: int, p: int) -> dict:
        """
        Closed forms at (j1, j2, n') = (1, 2, 3): f = a_(n+1) - a_(n+2), g = 8 a_(n+p+2) - 8 a_(n+p+1).
        """

        def a(column: int) -> int:
            return array.coeff(column, ell)

        return {'f': a(n + 1) - a(n + 2), 'g': 8 * a(n + p + 2) - 8 * a(n + p + 1)}

    @staticmethod
    def xi_split(xi: int, p: int, nprime: int = 3, ndoubleprime: int = 6) -> XiSplit:
        """
        :param xi: int, odd, in (0, 2^(p-1))
        :param p: int, at least 1 + n' + n''
        :return: XiSplit

        :raises ValueError: if xi is even or out of range, or p is too small
        """

        if p < 1 + nprime + ndoubleprime:
            raise ValueError('p must be at least 1 + nprime + ndoubleprime')
        if xi % 2 == 0 or not 0 < xi < 1 << (p - 1):
            raise ValueError('xi must be odd and lie in (0, 2^(p-1))')

        high_shift = p - 1 - ndoubleprime
        xi1 = xi & ((1 << nprime) - 1)
        xi2 = (xi >> nprime) & ((1 << (high_shift - nprime)) - 1)
        xi4 = xi >> high_shift

        return XiSplit(xi, p, nprime, ndoubleprime, xi1, xi2, xi4)

    @staticmethod
    def constant_window_check(array: CoeffArray, n: int, ell: int, M: int, p: int) -> bool:
        """
        :return: bool, a_(n+p+u, ell+v) = a_(n+p, ell) for all 1 <= u <= M and 0 <= v <= M
        """

        if M < 1:
            raise ValueError('M must be at least 1')

        base = array.coeff(n + p, ell)
        return all(array.coeff(n + p + u, ell + v) == base for v in range(M + 1) for u in range(1, M + 1))

    @staticmethod
    def scan_constant_windows(array: CoeffArray, rows: int, cols: int, M: int, p: int = 0) -> list:
        """
        :return: list, every (n, ell) with n < cols and ell <= rows where the constant-window condition holds
        """

        return [(n, ell) for ell in range(1, rows + 1) for n in range(cols)
                if ResidueAlgebra.constant_window_check(array, n, ell, M, p)]

    @staticmethod
    def small_p_reduction_check(array: CoeffArray, n: int, ell: int, nprime: int, p: int) -> bool:
        """
        For p <= n' the windows m(j + n, ell), 1 <= j <= n', all agree exactly when
        a_(n+i+j, ell) = a_(n+i+1, ell) for 1 <= j <= n' and 0 <= i < p.

        :raises ValueError: if p > n'
        """

        if not 1 <= p <= nprime:
            raise ValueError('need 1 <= p <= nprime')

        return all(array.coeff(n + i + j, ell) == array.coeff(n + i + 1, ell)
                   for i in range(p) for j in range(1, nprime + 1))

    @staticmethod
    def _constancy_holds(array: CoeffArray, n: int, ell: int, p: int, M: int, xi4: int, ndoubleprime: int) -> bool:
        near = array.coeff(n + p, ell)
        is_far_constant = all(array.coeff(n + p + u, ell + v) == near for u in range(M + 1) for v in range(M + 1))
        if not is_far_constant:
            return False
        if xi4 < 1 << (ndoubleprime - 1):
            return True
        low = array.coeff(n + 1, ell)
        return all(array.coeff(n + u, ell + v) == low for u in range(1, M + 1) for v in range(M + 1))

    @staticmethod
    def thm_4_11_condition(array: CoeffArray, segment, first_row: int, offset: int, xi: int, p: int, M: int,
                           mprime: int, nprime: int = 3, ndoubleprime: int = 6) -> dict:
        """
        Looks for a row ell of the segment at which the constancy condition on the windows fails, which
        is when the contraction bound on the segment average is claimed.

        The segment is (x_(first_row+1), ..., x_(first_row+L)) with total p_t; later segments add offset to
        every suffix sum. The admissible rows satisfy first_row < ell < ell + M < first_row + L.

        :param segment: SyracuseCode or sequence, the entries of the segment
        :param first_row: int, number of rows before the segment
        :param offset: int, total of the later segments
        :param xi: int, odd, in (0, 2^(p-1))
        :param p: int, at least 1 + n' + n''
        :param M: int, window size
        :param mprime: int, with p_t - L >= mprime >= M^2
        :return: dict, bound_applies, rows, lambda_modulus

        :raises ValueError: if the hypotheses on the segment fail
        """

        segment = segment if isinstance(segment, SyracuseCode) else SyracuseCode(tuple(segment))
        split = ResidueAlgebra.xi_split(xi, p, nprime, ndoubleprime)
        length, total = segment.k, segment.n
        if M < 1 or mprime < M * M or total - length < mprime:
            raise ValueError('need M >= 1 and p_t - L >= mprime >= M^2')
        if first_row < 0 or offset < 0:
            raise ValueError('first_row and offset must be nonnegative')

        rows = list()
        for local in range(1, length - M):
            ell = first_row + local
            n = segment.suffix(local) + offset
            holds = ResidueAlgebra._constancy_holds(array, n, ell, p, M, split.xi4, ndoubleprime)
            rows.append({'ell': ell, 'n': n, 'constancy_holds': holds})

        lam = SegmentDecomposition.segment_lambda(first_row, first_row + length, total, offset, xi, p, array)
        return {
            'bound_applies': any(not row['constancy_holds'] for row in rows),
            'rows': rows,
            'xi_split': {'xi1': split.xi1, 'xi2': split.xi2, 'xi4': split.xi4},
            'lambda_modulus': abs(lam),
        }
