# File: test_cylinder.py
# Description: Unit tests for the CylinderMeasure class.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from fractions import Fraction
import math
import pytest

from syrlab.codes.syracuse_code import CodeMap
from syrlab.geometric.cylinder import CylinderMeasure
from syrlab.geometric.geom_params import GeomParams


@pytest.mark.parametrize("mu, code, expected_value", [
    (2, (1, 2), Fraction(1, 8)),
    (2, (1,), Fraction(1, 2)),
    (3, (2, 1), Fraction(2, 27)),
])
def test_cylinder_measure(mu, code, expected_value):
    """
    Test the cylinder_measure method.
    """
    assert CylinderMeasure.cylinder_measure(GeomParams(mu), code) == expected_value

@pytest.mark.parametrize("n, k, mu", [(3, 2, 2), (6, 3, 3), (9, 4, '3/2')])
def test_binomial_weight_exact(n, k, mu):
    """
    Test that binomial_weight_exact is the total mass of the codes with sum n.
    """
    params = GeomParams(mu)
    total = sum(CylinderMeasure.cylinder_measure(params, code) for code in CodeMap.compositions(n, k))
    assert CylinderMeasure.binomial_weight_exact(n, k, mu) == total

def test_binomial_weight_exact_value():
    """
    Test the binomial_weight_exact method at n = 3, k = 2, mu = 2.
    """
    assert CylinderMeasure.binomial_weight_exact(3, 2, 2) == Fraction(1, 4)

@pytest.mark.parametrize("n, k", [(3, 0), (3, 4)])
def test_binomial_weight_raise_range(n, k):
    """
    Test the exact and log binomial weights for k outside [1, n].
    """
    with pytest.raises(ValueError):
        CylinderMeasure.binomial_weight_exact(n, k, 2)
    with pytest.raises(ValueError):
        CylinderMeasure.log_binomial_weight(n, k, 2)

@pytest.mark.parametrize("mu", [2, 3, 1.5])
def test_g_mu_maximum(mu):
    """
    Test that g_mu vanishes at 1/mu and is negative elsewhere.
    """
    mu = float(mu)
    assert CylinderMeasure.g_mu(1.0 / mu, mu) == pytest.approx(0.0, abs=1e-12)
    assert CylinderMeasure.g_mu(0.9 / mu, mu) < 0
    assert CylinderMeasure.g_mu(min(0.99, 1.1 / mu), mu) < 0

@pytest.mark.parametrize("nu", [0.0, 1.0, -0.5])
def test_g_mu_raise_range(nu):
    """
    Test the g_mu method for nu outside (0, 1).
    """
    with pytest.raises(ValueError):
        CylinderMeasure.g_mu(nu, 2)

def test_lambda_nu():
    """
    Test the lambda_nu method.
    """
    assert CylinderMeasure.lambda_nu(0.5) == pytest.approx(0.0, abs=1e-12)
    assert CylinderMeasure.lambda_nu(0.25) > 0
    assert CylinderMeasure.lambda_nu(0.75) > 0

@pytest.mark.parametrize("n, k, mu", [(10, 4, 3), (40, 20, 2), (25, 7, '3/2')])
def test_log_binomial_weight(n, k, mu):
    """
    Test that log_binomial_weight agrees with the exact weight.
    """
    exact = float(CylinderMeasure.binomial_weight_exact(n, k, mu))
    assert CylinderMeasure.log_binomial_weight(n, k, Fraction(mu)) == pytest.approx(math.log(exact), rel=1e-9)

def test_asymptotics_point():
    """
    Test that the exact to asymptotic ratio approaches 1.
    """
    point = CylinderMeasure.asymptotics_point(2000, 1000, 2)
    assert point.nu == 0.5
    assert point.lambda_nu == pytest.approx(0.0, abs=1e-12)
    assert point.ratio == pytest.approx(1.0, abs=0.01)
    far = CylinderMeasure.asymptotics_point(2000, 600, 2)
    assert far.ratio == pytest.approx(1.0, abs=0.01)
    assert far.lambda_nu > 0

def test_asymptotics_point_raise_range():
    """
    Test the asymptotics_point method for k = n.
    """
    with pytest.raises(ValueError):
        CylinderMeasure.asymptotics_point(5, 5, 2)
