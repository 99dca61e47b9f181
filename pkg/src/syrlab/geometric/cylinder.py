# File: cylinder.py
# Description: Cylinder measures and binomial weights under the geometric product measure.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.special import gammaln

from syrlab.codes.syracuse_code import SyracuseCode
from syrlab.geometric.geom_params import GeomParams


@dataclass(frozen=True)
class AsymptoticsPoint:
    """
    One evaluation of the binomial-weight asymptotics at k = nu n.

    lambda_nu is the mu = 2 decay exponent: C(n-1, k-1) ~ 2^n (2 pi n nu (1 - nu))^(-1/2) 2^(-n lambda_nu).
    """

    n: int
    k: int
    nu: float
    g_value: float
    lambda_nu: float
    exact: float
    asymptotic: float

    @property
    def ratio(self) -> float:
        return self.exact / self.asymptotic


class CylinderMeasure:
    """
    Masses of cylinders [x_1, ..., x_k] and of the level sets x_[1,k] = n.
    """

    @staticmethod
    def cylinder_measure(params: GeomParams, code):
        """
        mu^(-k) (1 - 1/mu)^(x_[1,k] - k).

        :param params: GeomParams
        :param code: SyracuseCode or sequence
        :return: Fraction when mu is rational, float otherwise
        """

        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        mass = (1 / params.mu) ** code.k * params.lam ** (code.n - code.k)
        return mass

    @staticmethod
    def binomial_weight_exact(n: int, k: int, mu) -> Fraction:
        """
        C(n-1, k-1) mu^(-k) (1 - 1/mu)^(n-k), the mass of all codes of length k with sum n.

        :param n: int
        :param k: int, 1 <= k <= n
        :param mu: rational mean
        :return: Fraction
        """

        if not 1 <= k <= n:
            raise ValueError('need 1 <= k <= n')

        mu = Fraction(mu)
        weight = math.comb(n - 1, k - 1) * (1 / mu) ** k * (1 - 1 / mu) ** (n - k)
        return weight

    @staticmethod
    def g_mu(nu: float, mu) -> float:
        """
        g_mu(nu) = nu log(1 / (mu nu)) + (1 - nu) log((1 - 1/mu) / (1 - nu)); maximal, and zero, at nu = 1/mu.
        """

        if not 0 < nu < 1:
            raise ValueError('nu must lie in (0, 1)')

        mu = float(mu)
        value = nu * math.log(1.0 / (mu * nu)) + (1.0 - nu) * math.log((1.0 - 1.0 / mu) / (1.0 - nu))
        return value

    @staticmethod
    def lambda_nu(nu: float) -> float:
        """
        The mu = 2 decay exponent -g_2(nu) / log 2, nonnegative and zero only at nu = 1/2.
        """

        return -CylinderMeasure.g_mu(nu, 2) / math.log(2.0)

    @staticmethod
    def binomial_weight_asymptotic(n: int, nu: float, mu) -> float:
        """
        nu (2 pi n nu (1 - nu))^(-1/2) exp(n g_mu(nu)).

        The leading factor nu comes from C(n-1, k-1) = (k/n) C(n, k); with it the ratio to the exact weight
        tends to 1.

        :param n: int
        :param nu: float, in (0, 1)
        :param mu: mean
        :return: float
        """

        exponent = n * CylinderMeasure.g_mu(nu, mu)
        prefactor = nu / math.sqrt(2.0 * math.pi * n * nu * (1.0 - nu))
        return prefactor * math.exp(exponent)

    @staticmethod
    def log_binomial_weight(n: int, k: int, mu) -> float:
        """
        log of binomial_weight_exact in floating point, for large n.
        """

        if not 1 <= k <= n:
            raise ValueError('need 1 <= k <= n')

        mu = float(mu)
        log_comb = gammaln(n) - gammaln(k) - gammaln(n - k + 1)
        return float(log_comb - k * math.log(mu) + (n - k) * math.log1p(-1.0 / mu))

    @staticmethod
    def asymptotics_point(n: int, k: int, mu) -> AsymptoticsPoint:
        """
        :param n: int
        :param k: int, 1 <= k < n
        :param mu: mean
        :return: AsymptoticsPoint
        """

        if not 1 <= k < n:
            raise ValueError('need 1 <= k < n')

        nu = k / n
        exact = math.exp(CylinderMeasure.log_binomial_weight(n, k, mu))
        point = AsymptoticsPoint(
            n=n, k=k, nu=nu,
            g_value=CylinderMeasure.g_mu(nu, mu),
            lambda_nu=CylinderMeasure.lambda_nu(nu),
            exact=exact,
            asymptotic=CylinderMeasure.binomial_weight_asymptotic(n, nu, mu),
        )
        return point
