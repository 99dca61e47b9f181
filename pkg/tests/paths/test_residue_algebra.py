# File: test_residue_algebra.py
# Description: Unit tests for the ResidueAlgebra, TriangleWindow and XiSplit classes.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import pytest

from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.errors import InvariantViolation
from syrlab.paths.residue_algebra import ResidueAlgebra, TriangleWindow, XiSplit


@pytest.mark.parametrize("m, p, expected_value", [(5, 3, -3), (4, 3, 4), (3, 3, 3), (8, 3, 0), (1, 1, 1)])
def test_centered(m, p, expected_value):
    """
    Test the centered method.
    """
    assert ResidueAlgebra.centered(m, p) == expected_value

@pytest.mark.parametrize("kwargs", [{'n': -1}, {'ell': 0}, {'M': 0}, {'j1': 2, 'j2': 2}, {'j2': 4}, {'ndoubleprime': 3}])
def test_triangle_window_raise_invalid(kwargs):
    """
    Test the TriangleWindow constructor for anchors and probe indices out of range.
    """
    parameters = dict(n=0, ell=1)
    parameters.update(kwargs)
    with pytest.raises(ValueError):
        TriangleWindow(**parameters)

def test_m_of():
    """
    Test the m_of method.
    """
    array = CoeffArray()
    assert ResidueAlgebra.m_of(array, 1, 0, 2, 6) == 35
    assert ResidueAlgebra.m_of(array, 0, 0, 1, 4) == 5
    with pytest.raises(ValueError):
        ResidueAlgebra.m_of(array, -1, 0, 1, 4)

def test_decompose_m():
    """
    Test the decompose_m method on row 2.
    """
    assert ResidueAlgebra.decompose_m(CoeffArray(), 1, 0, 2, 6, 3) == {'b': 3, 'd': 0, 'c': 1, 'm': 35}

def test_decompose_m_all_windows():
    """
    Test that decompose_m recomposes every window of the first rows.
    """
    array = CoeffArray()
    for ell in range(1, 6):
        for n in range(20):
            for j in range(1, 4):
                parts = ResidueAlgebra.decompose_m(array, j, n, ell, 8, 3)
                assert parts['b'] + (parts['d'] << (3 - j)) + (parts['c'] << (8 - j)) == parts['m']

@pytest.mark.parametrize("j, nprime, p", [(0, 3, 6), (4, 3, 6), (2, 3, 3)])
def test_decompose_m_raise_invalid(j, nprime, p):
    """
    Test the decompose_m method unless 1 <= j <= n' < p.
    """
    with pytest.raises(ValueError):
        ResidueAlgebra.decompose_m(CoeffArray(), j, 0, 1, p, nprime)

def test_decompose_m_raise_invariant(mocker):
    """
    Test the decompose_m method when the window does not match its parts.
    """
    mocker.patch.object(ResidueAlgebra, 'm_of', return_value=1000)
    with pytest.raises(InvariantViolation):
        ResidueAlgebra.decompose_m(CoeffArray(), 1, 0, 2, 6, 3)

def test_f_g_special_case():
    """
    Test that f_g at (j1, j2, n') = (1, 2, 3) matches its closed form.
    """
    array = CoeffArray()
    for ell in range(1, 5):
        for n in range(12):
            for p in (4, 7, 10):
                general = ResidueAlgebra.f_g(array, 1, 2, 3, n, ell, p)
                special = ResidueAlgebra.f_g_special_case(array, n, ell, p)
                assert (general['f'], general['g']) == (special['f'], special['g'])

@pytest.mark.parametrize("j1, j2, nprime", [(1, 3, 4), (2, 3, 5), (1, 2, 2)])
def test_f_g(j1, j2, nprime):
    """
    Test the f_g identity and bounds for other probe indices.
    """
    array = CoeffArray()
    for ell in range(1, 4):
        for n in range(10):
            result = ResidueAlgebra.f_g(array, j1, j2, nprime, n, ell, 9)
            assert abs(result['f']) < 1 << (2 * nprime - j1 - j2)

def test_f_g_raise_invalid():
    """
    Test the f_g method for probe indices out of order.
    """
    with pytest.raises(ValueError):
        ResidueAlgebra.f_g(CoeffArray(), 2, 1, 3, 0, 1, 8)

def test_xi_split():
    """
    Test the xi_split method.
    """
    split = ResidueAlgebra.xi_split(43, 12)
    assert split == XiSplit(xi=43, p=12, nprime=3, ndoubleprime=6, xi1=3, xi2=1, xi4=1)
    assert split.xi3 == 11
    assert split.recompose() == 43

def test_xi_split_recompose():
    """
    Test that every admissible xi is recovered from its split.
    """
    for xi in range(1, 1 << 10, 2):
        assert ResidueAlgebra.xi_split(xi, 11, 2, 5).recompose() == xi

@pytest.mark.parametrize("xi, p", [(2, 12), (1 << 11, 12), (-1, 12), (1, 9)])
def test_xi_split_raise_invalid(xi, p):
    """
    Test the xi_split method for even or out of range xi and small p.
    """
    with pytest.raises(ValueError):
        ResidueAlgebra.xi_split(xi, p)

@pytest.mark.parametrize("n, ell, M, p, expected_result", [(1, 2, 1, 0, True), (0, 1, 1, 0, False), (3, 1, 2, 1, False)])
def test_constant_window_check(n, ell, M, p, expected_result):
    """
    Test the constant_window_check method.
    """
    assert ResidueAlgebra.constant_window_check(CoeffArray(), n, ell, M, p) == expected_result

def test_constant_window_check_raise_m():
    """
    Test the constant_window_check method for M below 1.
    """
    with pytest.raises(ValueError):
        ResidueAlgebra.constant_window_check(CoeffArray(), 0, 1, 0, 0)

def test_scan_constant_windows():
    """
    Test that scan_constant_windows lists exactly the anchors passing the check and never row 1.
    """
    array = CoeffArray()
    anchors = ResidueAlgebra.scan_constant_windows(array, 4, 30, 1)
    assert (1, 2) in anchors
    assert all(ell > 1 for _, ell in anchors)
    assert anchors == [(n, ell) for ell in range(1, 5) for n in range(30)
                       if ResidueAlgebra.constant_window_check(array, n, ell, 1, 0)]

@pytest.mark.parametrize("n, ell, nprime, p, expected_result", [(0, 1, 2, 1, False), (4, 3, 3, 1, True), (0, 1, 1, 1, True)])
def test_small_p_reduction_check(n, ell, nprime, p, expected_result):
    """
    Test the small_p_reduction_check method.
    """
    assert ResidueAlgebra.small_p_reduction_check(CoeffArray(), n, ell, nprime, p) == expected_result

def test_small_p_reduction_check_agrees_with_windows():
    """
    Test that the digit condition holds exactly when the windows m(j + n, ell), 1 <= j <= n', coincide.
    """
    array = CoeffArray()
    for ell in range(1, 5):
        for n in range(30):
            for p in (1, 2, 3):
                windows = {ResidueAlgebra.m_of(array, j, n, ell, p) for j in range(1, 4)}
                assert ResidueAlgebra.small_p_reduction_check(array, n, ell, 3, p) == (len(windows) == 1)

def test_small_p_reduction_check_raise_p():
    """
    Test the small_p_reduction_check method for p above n'.
    """
    with pytest.raises(ValueError):
        ResidueAlgebra.small_p_reduction_check(CoeffArray(), 0, 1, 2, 3)

@pytest.mark.parametrize("xi4, expected_result", [(0, True), (32, False)])
def test_constancy_holds(xi4, expected_result):
    """
    Test the _constancy_holds method with and without the low-digit condition.
    """
    assert ResidueAlgebra._constancy_holds(CoeffArray(), 0, 2, 6, 1, xi4, 6) == expected_result

def test_thm_4_11_condition():
    """
    Test the thm_4_11_condition method on a segment of five 3s.
    """
    result = ResidueAlgebra.thm_4_11_condition(CoeffArray(), (3, 3, 3, 3, 3), 0, 0, 43, 12, 2, 4)
    assert result['bound_applies']
    assert [row['ell'] for row in result['rows']] == [1, 2]
    assert [row['n'] for row in result['rows']] == [15, 12]
    assert result['xi_split'] == {'xi1': 3, 'xi2': 1, 'xi4': 1}
    assert 0.0 <= result['lambda_modulus'] <= 1.0 + 1e-12

@pytest.mark.parametrize("segment, first_row, M, mprime", [
    ((1, 1, 1, 1), 0, 2, 4),
    ((3, 3, 3, 3, 3), 0, 2, 3),
    ((3, 3, 3, 3, 3), -1, 2, 4),
])
def test_thm_4_11_condition_raise_invalid(segment, first_row, M, mprime):
    """
    Test the thm_4_11_condition method when the segment hypotheses fail.
    """
    with pytest.raises(ValueError):
        ResidueAlgebra.thm_4_11_condition(CoeffArray(), segment, first_row, 0, 43, 12, M, mprime)
