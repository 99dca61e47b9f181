# File: test_path_sample.py
# Description: Unit tests for the PathSample and PathDensity classes and the wilson_interval function.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from fractions import Fraction
import math
import pytest

from syrlab.codes.syracuse_code import SyracuseCode
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.paths.path_sample import PathDensity, PathSample, wilson_interval
from syrlab.paths.residue_algebra import ResidueAlgebra


def test_path_sample_from_code():
    """
    Test the from_code constructor and the visited columns.
    """
    path = PathSample.from_code((1, 2, 3), 2)
    assert path.code == SyracuseCode((1, 2, 3))
    assert path.suffix_sums == (6, 5, 3)
    assert path.columns() == (8, 7, 5)

@pytest.mark.parametrize("suffix_sums, p_offset", [((6, 5, 3), -1), ((6, 5), 0), ((6, 6, 3), 0)])
def test_path_sample_raise_invalid(suffix_sums, p_offset):
    """
    Test the PathSample constructor for negative offsets and malformed suffix sums.
    """
    with pytest.raises(ValueError):
        PathSample(SyracuseCode((1, 2, 3)), suffix_sums, p_offset)

@pytest.mark.parametrize("code, p, expected_bits", [((1, 2, 3), 0, (1, 0, 1)), ((2,), 0, (1,)), ((1,), 1, (1,))])
def test_bits_along_path(code, p, expected_bits):
    """
    Test the bits_along_path method.
    """
    assert PathDensity.bits_along_path(CoeffArray(), code, p) == expected_bits

@pytest.mark.parametrize("bits, expected_density", [
    ((1, 0, 1), (Fraction(1, 3), Fraction(2, 3))),
    ((0,), (Fraction(1), Fraction(0))),
    ([1, 1, 0, 0], (Fraction(1, 2), Fraction(1, 2))),
])
def test_zero_one_density(bits, expected_density):
    """
    Test the zero_one_density method.
    """
    assert PathDensity.zero_one_density(bits) == expected_density

@pytest.mark.parametrize("bits", [(), (0, 2)])
def test_zero_one_density_raise_invalid(bits):
    """
    Test the zero_one_density method for empty sequences and entries other than 0 and 1.
    """
    with pytest.raises(ValueError):
        PathDensity.zero_one_density(bits)

def test_window_density():
    """
    Test the window_density method against the row-by-row constant-window check.
    """
    array = CoeffArray()
    code = (3, 1, 4, 1, 5, 9)
    path = PathSample.from_code(code, 2)
    expected = sum(ResidueAlgebra.constant_window_check(array, n, ell, 1, 2)
                   for ell, n in enumerate(path.suffix_sums, start=1))
    assert PathDensity.window_density(array, code, 2, 1) == Fraction(expected, 6)

@pytest.mark.parametrize("successes, trials", [(1, 10), (5, 10), (9, 10), (37, 1000)])
def test_wilson_interval(successes, trials):
    """
    Test that the Wilson interval contains the observed proportion and stays in [0, 1].
    """
    low, high = wilson_interval(successes, trials)
    assert 0.0 <= low <= successes / trials <= high <= 1.0

def test_wilson_interval_extremes():
    """
    Test the Wilson interval when every trial fails or every trial succeeds.
    """
    low, high = wilson_interval(0, 10)
    assert low == pytest.approx(0.0, abs=1e-12)
    assert 0.0 < high < 0.5
    low, high = wilson_interval(10, 10)
    assert 0.5 < low < 1.0
    assert high == pytest.approx(1.0, abs=1e-12)

def test_wilson_interval_value():
    """
    Test the Wilson interval for 5 successes in 10 trials.
    """
    low, high = wilson_interval(5, 10)
    assert low == pytest.approx(0.2366, abs=1e-4)
    assert high == pytest.approx(0.7634, abs=1e-4)

def test_wilson_interval_raise_trials():
    """
    Test the wilson_interval function without trials.
    """
    with pytest.raises(ValueError):
        wilson_interval(0, 0)

def test_density_tail_experiment():
    """
    Test the density_tail_experiment method for consistency and reproducibility.
    """
    result = PathDensity.density_tail_experiment(2, 12, 2, 0.25, 3000, seed=4, threads=1, shard_size=1000)
    assert result['nsamples'] == 3000
    assert result['frac_exceptional'] >= max(result['frac_zero_exceptional'], result['frac_one_exceptional'])
    assert result['ci_low'] <= result['frac_exceptional'] <= result['ci_high']
    assert result['e_to_minus_ck_reference'] == pytest.approx(math.exp(-3.0))
    pooled = PathDensity.density_tail_experiment(2, 12, 2, 0.25, 3000, seed=4, threads=2, shard_size=1000)
    assert pooled == result

def test_density_tail_experiment_slow_path(mocker):
    """
    Test that codes beyond the bit tables give the same counts through the direct path.
    """
    fast = PathDensity.density_tail_experiment(2, 6, 1, 0.3, 500, seed=8, threads=1)
    mocker.patch('syrlab.paths.path_sample.table_width', return_value=7)
    assert PathDensity.density_tail_experiment(2, 6, 1, 0.3, 500, seed=8, threads=1) == fast

@pytest.mark.parametrize("kwargs", [{'c': 0.0}, {'c': 1.0}, {'k': 0}, {'p': -1}, {'nsamples': 0}])
def test_density_tail_experiment_raise_invalid(kwargs):
    """
    Test the density_tail_experiment method for parameters out of range.
    """
    parameters = dict(mu=2, k=4, p=1, c=0.1, nsamples=10, seed=0)
    parameters.update(kwargs)
    with pytest.raises(ValueError):
        PathDensity.density_tail_experiment(**parameters)

def test_conjecture_4_12_experiment():
    """
    Test the conjecture_4_12_experiment method against window_density on the same sample size.
    """
    result = PathDensity.conjecture_4_12_experiment(2, 10, 2, 1, 0.5, 2000, seed=3, threads=1)
    assert result['nsamples'] == 2000
    assert result['M'] == 1
    assert 0.0 <= result['frac_exceptional'] <= 1.0
    assert result['ci_low'] <= result['frac_exceptional'] <= result['ci_high']

def test_conjecture_4_12_experiment_slow_path(mocker):
    """
    Test that the direct window check and the bit tables agree.
    """
    fast = PathDensity.conjecture_4_12_experiment(2, 6, 1, 2, 0.6, 500, seed=8, threads=1)
    mocker.patch('syrlab.paths.path_sample.table_width', return_value=7)
    assert PathDensity.conjecture_4_12_experiment(2, 6, 1, 2, 0.6, 500, seed=8, threads=1) == fast

@pytest.mark.parametrize("M, c", [(0, 0.1), (2, 1.5)])
def test_conjecture_4_12_experiment_raise_invalid(M, c):
    """
    Test the conjecture_4_12_experiment method for M below 1 and c out of range.
    """
    with pytest.raises(ValueError):
        PathDensity.conjecture_4_12_experiment(2, 4, 1, M, c, 10, seed=0)
