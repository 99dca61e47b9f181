# File: descent.py
# Description: Exact descent criteria for Syracuse iterates on codes.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from syrlab.codes.syracuse_code import CodeMap, SyracuseCode
from syrlab.collatz.maps import CollatzMaps
from syrlab.errors import InvariantViolation


@dataclass(frozen=True)
class DescentParams:
    """
    Parameters of the descent criteria.

    alpha1 is not determined by the criteria; it is filled in from experiments when known.
    """

    alpha: Fraction = Fraction(1, 5)
    r: Optional[int] = None
    p: Optional[int] = None
    alpha1: Optional[float] = None

    def __post_init__(self) -> None:
        alpha = Fraction(self.alpha)
        if not 0 < alpha < Fraction(1, 2):
            raise ValueError('alpha must lie in (0, 1/2)')
        object.__setattr__(self, 'alpha', alpha)


class Descent:
    """
    Conditions under which Syr^k(N) is provably smaller than N, evaluated without floating point.
    """

    @staticmethod
    def _at_least_power_of_two(value: Fraction, exponent: Fraction) -> bool:
        """
        value >= 2^exponent for positive rational value and rational exponent.
        """

        exponent = Fraction(exponent)
        q = exponent.denominator
        return Fraction(value) ** q >= Fraction(2) ** exponent.numerator

    @staticmethod
    def _descent_conditions(n: int, code: SyracuseCode, alpha: Fraction) -> dict:
        total = code.n
        conditions = {
            'N_large': Descent._at_least_power_of_two(Fraction(n), (1 - alpha) * total),
            'coefficient_small': Descent._at_least_power_of_two(Fraction(1 << total, 3 ** code.k), alpha * total),
            'suffixes_large': all(
                Descent._at_least_power_of_two(Fraction(3 ** j << code.suffix(j)), alpha * total)
                for j in range(1, code.k + 1)),
        }
        return conditions

    @staticmethod
    def check_lemma_2_8(code, alpha) -> dict:
        """
        Evaluate the three descent conditions for N = N(x, 1) and, when all hold, check
        Syr^k(N) <= 2^(-alpha x_[1,k]) (1 + k) N.

        :param code: SyracuseCode or sequence
        :param alpha: Fraction or str, in (0, 1/2)
        :return: dict, conditions_met, conditions, bound (float, the right-hand side), actual, bound_holds

        :raises InvariantViolation: if the conditions hold and the bound fails
        """

        alpha = DescentParams(alpha=Fraction(alpha)).alpha
        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        n = CodeMap.code_to_integer_ext(code)
        conditions = Descent._descent_conditions(n, code, alpha)
        conditions_met = all(conditions.values())

        actual = CodeMap.syr_k_closed_form(code)
        # Syr^k(N) <= 2^(-alpha n) (1 + k) N  iff  (1 + k) N / Syr^k(N) >= 2^(alpha n)
        bound_holds = Descent._at_least_power_of_two(Fraction((1 + code.k) * n, actual), alpha * code.n)
        bound = float((1 + code.k) * n) * 2.0 ** float(-alpha * code.n)

        if conditions_met and not bound_holds:
            raise InvariantViolation('descent bound failed', {'code': code.xs, 'N': n, 'actual': actual})

        result = {
            'conditions_met': conditions_met,
            'conditions': conditions,
            'bound': bound,
            'actual': actual,
            'bound_holds': bound_holds,
        }
        return result

    @staticmethod
    def _suffix_start(code: SyracuseCode, r: int) -> tuple:
        if not 1 <= r <= code.k:
            raise ValueError('r must lie in [1, k]')
        n = CodeMap.code_to_integer_ext(code)
        head = code.k - r
        n_1 = CollatzMaps.syr_k(n, head)
        suffix = SyracuseCode(code.xs[head:])

        return n, n_1, suffix

    @staticmethod
    def check_cor_4_2_conditions(code, r: int, alpha) -> bool:
        """
        The four conditions on the last r entries of the code, with N_1 = Syr^(k-r)(N(x, 1)):
        3r/2 <= x_[1,r] <= 3r, N_1 >= 2^((1-alpha) x_[1,r]), 3^(-r) 2^(x_[1,r]) >= 2^(alpha x_[1,r]),
        and 3^(-j) 2^(alpha x_[1,r]) <= 2^(x_[j,r]) for 1 <= j <= r.

        :param code: SyracuseCode or sequence
        :param r: int, 1 <= r <= k
        :param alpha: Fraction or str
        :return: bool
        """

        alpha = DescentParams(alpha=Fraction(alpha), r=r).alpha
        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        _, n_1, suffix = Descent._suffix_start(code, r)

        is_sum_in_range = 3 * r <= 2 * suffix.n <= 6 * r
        conditions = Descent._descent_conditions(n_1, suffix, alpha)

        return is_sum_in_range and all(conditions.values())

    @staticmethod
    def verify_corollary_4_2_descent(code, r: int) -> dict:
        """
        Whether Syr^k(N) < 2^(-r/5) Syr^(k-r)(N) for N = N(x, 1), with the conditions on the last r entries.

        :param code: SyracuseCode or sequence of length k
        :param r: int, 1 <= r <= k
        :return: dict, descended, conditions_met, start, end
        """

        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        _, n_1, _ = Descent._suffix_start(code, r)
        end = CollatzMaps.syr_k(n_1, r)
        # end < 2^(-r/5) n_1  iff  (n_1 / end)^5 > 2^r
        descended = Fraction(n_1, end) ** 5 > (1 << r)

        result = {
            'descended': descended,
            'conditions_met': Descent.check_cor_4_2_conditions(code, r, Fraction(1, 5)),
            'start': n_1,
            'end': end,
        }
        return result
