# File: test_pushforward.py
# Description: Unit tests for the Pushforward class.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from fractions import Fraction
import numpy as np
import pytest

from syrlab.codes.syracuse_code import CodeMap
from syrlab.collatz.maps import CollatzMaps
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.errors import EnumerationLimitError
from syrlab.experiment.config import ExperimentConfig
from syrlab.geometric.cylinder import CylinderMeasure
from syrlab.geometric.geom_params import GeomParams
from syrlab.spectral.pushforward import Pushforward, table_width


@pytest.mark.parametrize("code, p, expected_value", [((1,), 1, 0), ((2,), 1, 1), ((2,), 2, 1)])
def test_syr_k_p(code, p, expected_value):
    """
    Test the syr_k_p method.
    """
    assert Pushforward.syr_k_p(code, p, CoeffArray()) == expected_value

def test_syr_k_p_raise_p():
    """
    Test the syr_k_p method for p below 1.
    """
    with pytest.raises(ValueError):
        Pushforward.syr_k_p((1,), 0, CoeffArray())

@pytest.mark.parametrize("code", [(1, 2), (3, 1, 4), (2, 2, 2, 2), (5, 1, 1)])
def test_syr_k_p_matches_iteration(code):
    """
    Test that syr_k_p and the window correction 3^k (1 - A1) recover Syr^k modulo 2^p.
    """
    p = 8
    array = CoeffArray()
    n = CodeMap.code_to_integer_ext(code)
    k = len(code)
    residue = Pushforward.syr_k_p(code, p, array)
    # both sides differ by a multiple of 3^k determined by the code alone
    difference = (CollatzMaps.syr_k(n, k) - residue) % (1 << p)
    assert (difference * pow(3, -k, 1 << p)) % (1 << p) in {(1 - a1) % (1 << p) for a1 in range(-k, 2 * k + 3)}

def test_residue_counts():
    """
    Test that residue_counts counts every composition once by total and residue.
    """
    array = CoeffArray()
    counts = Pushforward.residue_counts(1, 3, 2, 7, array=array)
    for s in range(8):
        expected = np.zeros(4, dtype=np.int64)
        for code in CodeMap.compositions(s, 3):
            suffix = [sum(code[i:]) for i in range(3)]
            expected[sum(array.window(i + 1, suffix[i], 2) for i in range(3)) % 4] += 1
        assert counts[s].astype(np.int64).tolist() == expected.tolist()

def test_residue_counts_offset():
    """
    Test residue_counts with an offset on a single row.
    """
    counts = Pushforward.residue_counts(2, 2, 1, 4, offset=1)
    # row 2 at columns 2..5 reads 1, 0, 0, 0
    assert counts[1:].tolist() == [[0, 1], [1, 0], [1, 0], [1, 0]]

@pytest.mark.parametrize("first_row, last_row, offset", [(0, 1, 0), (3, 2, 0), (1, 2, -1)])
def test_residue_counts_raise_invalid(first_row, last_row, offset):
    """
    Test the residue_counts method for bad row ranges and negative offsets.
    """
    with pytest.raises(ValueError):
        Pushforward.residue_counts(first_row, last_row, 2, 5, offset)

def test_pushforward_exact_small():
    """
    Test the exact pushforward at mu = 2, k = 1, p = 1 with the cutoff n_max = 4.
    """
    measure = Pushforward.pushforward_exact(2, 1, 1, n_max=4)
    assert measure.mass == [Fraction(5, 8), Fraction(5, 16)]
    assert measure.tail_mass == Fraction(1, 16)

@pytest.mark.parametrize("mu, k, p", [(2, 2, 2), ('3/2', 3, 2), (3, 2, 3)])
def test_pushforward_exact_by_enumeration(mu, k, p):
    """
    Test the exact pushforward against direct enumeration of the codes.
    """
    n_max = k + 6
    array = CoeffArray()
    params = GeomParams(mu)
    expected = [Fraction(0)] * (1 << p)
    for n in range(k, n_max + 1):
        for code in CodeMap.compositions(n, k):
            expected[Pushforward.syr_k_p(code, p, array)] += CylinderMeasure.cylinder_measure(params, code)

    measure = Pushforward.pushforward_exact(mu, k, p, n_max, array=array)
    assert measure.mass == expected
    assert measure.tail_mass == 1 - sum(expected)

@pytest.mark.parametrize("kwargs, exception", [
    ({'mu': 2.5, 'k': 1, 'p': 1}, ValueError),
    ({'mu': 2, 'k': 0, 'p': 1}, ValueError),
    ({'mu': 2, 'k': 3, 'p': 1, 'n_max': 2}, ValueError),
    ({'mu': 2, 'k': 8, 'p': 10, 'state_cap': 1000}, EnumerationLimitError),
])
def test_pushforward_exact_raise_invalid(kwargs, exception):
    """
    Test the pushforward_exact method for float means, empty codes, low cutoffs and the state cap.
    """
    with pytest.raises(exception):
        Pushforward.pushforward_exact(**kwargs)

def test_pushforward_limit_small():
    """
    Test the limit measure at mu = 2, k = 1, p = 1.
    """
    measure = Pushforward.pushforward_limit(2, 1, 1)
    assert measure.mass == [Fraction(2, 3), Fraction(1, 3)]
    assert measure.tail_mass == 0

@pytest.mark.parametrize("mu, k, p", [(2, 2, 2), (2, 3, 2), ('3/2', 2, 3)])
def test_pushforward_limit_envelope(mu, k, p):
    """
    Test that the limit measure lies between the truncated measure and the truncated measure plus its tail.
    """
    limit = Pushforward.pushforward_limit(mu, k, p)
    exact = Pushforward.pushforward_exact(mu, k, p, n_max=k + 30)
    assert sum(limit.mass) == 1
    for lower, value in zip(exact.mass, limit.mass):
        assert lower <= value <= lower + exact.tail_mass

def test_pushforward_limit_raise_state_cap():
    """
    Test the pushforward_limit method when the residue classes exceed the cap.
    """
    with pytest.raises(EnumerationLimitError):
        Pushforward.pushforward_limit(2, 6, 4, state_cap=1000)

def test_pushforward_mc_deterministic():
    """
    Test that the Monte Carlo pushforward depends on the seed only, not on the worker count.
    """
    serial = Pushforward.pushforward_mc(2, 3, 3, 20000, seed=5, threads=1, shard_size=3000)
    pooled = Pushforward.pushforward_mc(2, 3, 3, 20000, seed=5, threads=2, shard_size=3000)
    other = Pushforward.pushforward_mc(2, 3, 3, 20000, seed=6, threads=1, shard_size=3000)
    assert np.array_equal(serial.mass, pooled.mass)
    assert not np.array_equal(serial.mass, other.mass)
    assert serial.stderr is not None

def test_pushforward_mc_matches_limit():
    """
    Test that the Monte Carlo pushforward lies within five standard errors of the limit measure.
    """
    limit = Pushforward.pushforward_limit(2, 3, 2).as_float()
    measure = Pushforward.pushforward_mc(2, 3, 2, 100000, seed=1, threads=1)
    assert np.all(np.abs(measure.mass - limit) <= 5 * measure.stderr + 1e-12)

def test_pushforward_mc_slow_path(mocker):
    """
    Test that codes beyond the window tables give the same histogram through the direct path.
    """
    fast = Pushforward.pushforward_mc(2, 4, 3, 2000, seed=2, threads=1)
    mocker.patch('syrlab.spectral.pushforward.table_width', return_value=4)
    slow = Pushforward.pushforward_mc(2, 4, 3, 2000, seed=2, threads=1)
    assert np.array_equal(fast.mass, slow.mass)

@pytest.mark.parametrize("nsamples, p", [(0, 2), (10, 0), (10, 31)])
def test_pushforward_mc_raise_invalid(nsamples, p):
    """
    Test the pushforward_mc method for empty samples and p outside [1, 30].
    """
    with pytest.raises(ValueError):
        Pushforward.pushforward_mc(2, 2, p, nsamples, seed=0)

def test_table_width():
    """
    Test that the table width covers the mean suffix sum with room to spare.
    """
    assert table_width(2, 10) > 20 + 64
    assert table_width(Fraction(3, 2), 1) >= 66

@pytest.mark.parametrize("mode", ['exact', 'limit', 'mc'])
def test_measure_for_mode(mode):
    """
    Test the measure_for_mode method for every mode.
    """
    config = ExperimentConfig(k=2, p=2, n_max=20, nsamples=1000, threads=1)
    measure = Pushforward.measure_for_mode(mode, config)
    assert measure.p == 2
    assert measure.is_exact == (mode != 'mc')

def test_measure_for_mode_raise_mode():
    """
    Test the measure_for_mode method for an unknown mode.
    """
    with pytest.raises(ValueError):
        Pushforward.measure_for_mode('fft', ExperimentConfig())

def test_spectral_scan():
    """
    Test the spectral_scan method on the limit measure at k = 1, p = 1, where the nonzero coefficient is 1/3.
    """
    result = Pushforward.spectral_scan(2, 1, 1, 'limit')
    assert result['max_nonzero_xi_modulus'] == pytest.approx(1 / 3)
    assert result['argmax'] == 1
    assert result['c2_estimate'] == pytest.approx(np.log2(3))
    assert result['within_c2_bound']
    assert result['tail_mass'] == 0.0
    assert len(result['rows']) == 2
    assert result['rows'][0]['modulus'] == pytest.approx(1.0)
