# File: test_injectivity.py
# Description: Unit tests for the Injectivity class.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from fractions import Fraction
import pytest

from syrlab.codes.injectivity import Injectivity
from syrlab.codes.syracuse_code import CodeMap


@pytest.mark.parametrize("mu, expected_value", [(1, 1.0), (Fraction(3, 2), 5.828427)])
def test_separation_m(mu, expected_value):
    """
    Test the separation_M method.
    """
    assert Injectivity.separation_M(mu) == pytest.approx(expected_value, rel=1e-6)

@pytest.mark.parametrize("mu", [0.5, 1.6, 2])
def test_separation_m_raise_out_of_range(mu):
    """
    Test the separation_M method for mu outside [1, log 3 / log 2).
    """
    with pytest.raises(ValueError):
        Injectivity.separation_M(mu)

@pytest.mark.parametrize("mu, k, n", [('3/2', 6, 9), ('3/2', 4, 6), (1, 3, 3), ('1.5', 8, 11)])
def test_collision_experiment(mu, k, n):
    """
    Test the collision_experiment method.
    """
    report = Injectivity.collision_experiment(mu, k, n)
    assert report.name == 'lemma_3_5'
    assert report.passed
    assert report.details['k'] == k
    assert report.details['n'] == n
    assert report.details['max_fiber'] <= report.details['fiber_bound']
    assert report.details['codes'] == len(list(CodeMap.compositions(n, k, Fraction(mu))))

def test_collision_experiment_without_pairs():
    """
    Test that the pairwise check is skipped above the pair limit.
    """
    report = Injectivity.collision_experiment('3/2', 6, 9, pair_limit=0)
    assert not report.details['pairwise_checked']
    assert report.checks == len(set(CodeMap.syr_k_closed_form(code)
                                    for code in CodeMap.compositions(9, 6, Fraction(3, 2))))

def test_collision_experiment_detects_collisions(mocker):
    """
    Test that collision_experiment records a failure when every code lands on one image.
    """
    mocker.patch.object(CodeMap, 'syr_k_closed_form', return_value=5)
    report = Injectivity.collision_experiment('3/2', 6, 9)
    assert not report.passed
    assert report.details['max_fiber'] == report.details['codes']
