# File: segments.py
# Description: Splitting the Fourier transform of the pushforward into products over segments of rows.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import math
from collections import defaultdict
from fractions import Fraction

import numpy as np

from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.errors import InvariantViolation
from syrlab.spectral.measure import Spectral
from syrlab.spectral.pushforward import Pushforward


_logger = logging.getLogger(__name__)

_TOLERANCE = 1e-9


def _phases(xi: int, p: int) -> np.ndarray:
    size = 1 << p
    return np.exp(-2j * np.pi * xi * np.arange(size) / size)


def _check_segmentation(k: int, segmentation) -> tuple:
    segmentation = tuple(int(t) for t in segmentation) or (k,)
    is_increasing = all(a < b for a, b in zip(segmentation, segmentation[1:]))
    if not is_increasing or segmentation[0] < 1 or segmentation[-1] != k:
        raise ValueError('segmentation must be strictly increasing, positive and end at k')
    return (0,) + segmentation


class SegmentDecomposition:
    """
    For a segmentation 0 = k_0 < k_1 < ... < k_r = k the rows of segment j see the suffix sums
    x_[l,k_j] + u, where u = p_[j+1,r] is the total of the later segments. Summing each segment over
    its total p_j turns the transform into a sum over (p_1, ..., p_r) of products of segment terms.

    Transforms are taken at xi' = -3^k xi mod 2^p, the frequency seen by the raw window sum.
    """

    @staticmethod
    def segment_weight(length: int, q: int, mu) -> Fraction:
        """
        Geometric mass of all codes of the given length with total q.

        :return: Fraction, C(q - 1, length - 1) mu^-length (1 - 1/mu)^(q - length)
        """

        mu = Fraction(mu)
        if q < length:
            return Fraction(0)
        return math.comb(q - 1, length - 1) * (1 / mu) ** length * (1 - 1 / mu) ** (q - length)

    @staticmethod
    def _lambda_row(counts_row, length: int, q: int, phases: np.ndarray) -> complex:
        weights = np.array([float(Fraction(int(count), math.comb(q - 1, length - 1))) for count in counts_row])
        return complex(weights @ phases)

    @staticmethod
    def segment_lambda(l1: int, l2: int, q: int, u: int, xi: int, p: int, array: CoeffArray = None) -> complex:
        """
        Average of exp(-2 pi i xi / 2^p sum_l m_l(x_[l,l2] + u)) over the compositions of q into l2 - l1 parts.

        :param l1: int, rows l1 + 1 .. l2 form the segment
        :param l2: int, last row
        :param q: int, total of the segment
        :param u: int, offset added to every suffix sum
        :param xi: int, frequency
        :param p: int, window width
        :param array: CoeffArray, optional shared array
        :return: complex, of modulus at most 1

        :raises ValueError: if l2 <= l1, l1 < 0 or q < l2 - l1
        """

        if l1 < 0 or l2 <= l1:
            raise ValueError('need 0 <= l1 < l2')
        length = l2 - l1
        if q < length:
            raise ValueError('q must be at least l2 - l1')

        counts = Pushforward.residue_counts(l1 + 1, l2, p, q, u, array)
        return SegmentDecomposition._lambda_row(counts[q], length, q, _phases(xi, p))

    @staticmethod
    def segment_term(l1: int, l2: int, q: int, u: int, xi: int, p: int, mu, array: CoeffArray = None) -> dict:
        """
        The segment term and its modulus bound: term = weight * lambda, |term| <= weight.

        :return: dict, lambda, weight, term, within_bound
        """

        value = SegmentDecomposition.segment_lambda(l1, l2, q, u, xi, p, array)
        weight = float(SegmentDecomposition.segment_weight(l2 - l1, q, mu))
        term = weight * value

        return {'lambda': value, 'weight': weight, 'term': term, 'within_bound': abs(term) <= weight + _TOLERANCE}

    @staticmethod
    def _segment_tables(mu, k: int, p: int, boundaries: tuple, xi_shift: int, n_max: int, array: CoeffArray):
        """
        Yields, from the last segment to the first, a dict mapping the offset u to rows (q, lambda, weight).
        """

        phases = _phases(xi_shift, p)
        offsets = {0}
        for j in range(len(boundaries) - 1, 0, -1):
            l1, l2 = boundaries[j - 1], boundaries[j]
            length = l2 - l1
            table = dict()
            for u in sorted(offsets):
                qmax = n_max - u - l1
                if qmax < length:
                    continue
                counts = Pushforward.residue_counts(l1 + 1, l2, p, qmax, u, array)
                table[u] = [(q,
                             SegmentDecomposition._lambda_row(counts[q], length, q, phases),
                             float(SegmentDecomposition.segment_weight(length, q, mu)))
                            for q in range(length, qmax + 1)]
            yield j, table
            offsets = {u + q for u, rows in table.items() for q, _, _ in rows}

    @staticmethod
    def product_decomposition_check(mu, k: int, p: int, segmentation, xi: int, n_max: int = None,
                                    state_cap: int = 50_000_000, array: CoeffArray = None) -> dict:
        """
        Compare the transform of the truncated exact pushforward with the sum of segment products.

        Both sides run over the codes with x_[1,k] <= n_max, so the residual is rounding only; it is checked
        against tail + 1e-9. Also checks |term| <= weight for every segment term and the chain
        |sum of products| <= sum of |lambda| weight products <= assigned mass.

        :param mu: rational mean
        :param segmentation: sequence, k_1 < ... < k_r = k; empty for one segment
        :param xi: int, frequency in [0, 2^p)
        :return: dict, direct, decomposed, residual, allowance, chain_bound, assigned_mass

        :raises InvariantViolation: if the residual or a bound fails
        """

        boundaries = _check_segmentation(k, segmentation)
        if not 0 <= xi < 1 << p:
            raise ValueError('xi must lie in [0, 2^p)')
        if n_max is None:
            n_max = k + math.ceil(10 * Fraction(mu)) + 30

        array = array if array is not None else CoeffArray()
        measure = Pushforward.pushforward_exact(mu, k, p, n_max, state_cap, array)
        direct = complex(Spectral.dft(measure).values[xi])
        xi_shift = (-pow(3, k, 1 << p) * xi) % (1 << p)

        # per suffix total w: (sum of products, sum of |lambda| weight products, mass)
        suffix = {0: (1 + 0j, 1.0, 1.0)}
        term_violations = 0
        for _, table in SegmentDecomposition._segment_tables(mu, k, p, boundaries, xi_shift, n_max, array):
            extended = defaultdict(lambda: [0j, 0.0, 0.0])
            for u, rows in table.items():
                value, bound, mass = suffix[u]
                for q, lam, weight in rows:
                    if abs(weight * lam) > weight + _TOLERANCE:
                        term_violations += 1
                    entry = extended[u + q]
                    entry[0] += weight * lam * value
                    entry[1] += weight * abs(lam) * bound
                    entry[2] += weight * mass
            suffix = {w: tuple(entry) for w, entry in extended.items()}

        decomposed = sum(entry[0] for entry in suffix.values())
        chain_bound = sum(entry[1] for entry in suffix.values())
        assigned_mass = sum(entry[2] for entry in suffix.values())
        residual = abs(direct - decomposed)
        allowance = float(measure.tail_mass) + _TOLERANCE

        result = {
            'k': k,
            'p': p,
            'xi': xi,
            'segmentation': list(boundaries[1:]),
            'n_max': n_max,
            'direct': direct,
            'decomposed': decomposed,
            'residual': residual,
            'allowance': allowance,
            'chain_bound': chain_bound,
            'assigned_mass': assigned_mass,
            'term_violations': term_violations,
        }
        is_chain_ok = abs(decomposed) <= chain_bound + _TOLERANCE <= assigned_mass + 2 * _TOLERANCE
        if residual > allowance or term_violations or not is_chain_ok:
            raise InvariantViolation('segment product decomposition failed', result)

        _logger.debug('segment decomposition k=%d p=%d xi=%d residual %.3g', k, p, xi, residual)
        return result

    @staticmethod
    def segment_contraction_estimate(mu, k: int, p: int, segmentation, xi: int, c3: float, c4: float,
                                     n_max: int = None, array: CoeffArray = None) -> dict:
        """
        Empirical look at the segment contraction statement: for each (p_1, ..., p_r), count the segments
        with |lambda| <= e^-c4. Tuples with fewer than c4 r such segments are exceptional; their total
        mass is compared with e^-c4 k.

        :return: dict, exceptional_mass, reference, within_reference, lengths_within_c3, implied_bound
        """

        boundaries = _check_segmentation(k, segmentation)
        if not 0 < xi < 1 << p:
            raise ValueError('xi must lie in (0, 2^p)')
        if n_max is None:
            n_max = k + math.ceil(10 * Fraction(mu)) + 30

        array = array if array is not None else CoeffArray()
        xi_shift = (-pow(3, k, 1 << p) * xi) % (1 << p)
        threshold = math.exp(-c4)
        r = len(boundaries) - 1

        # (suffix total, number of contracting segments) -> mass
        states = {(0, 0): 1.0}
        contracting_terms = 0
        terms = 0
        for _, table in SegmentDecomposition._segment_tables(mu, k, p, boundaries, xi_shift, n_max, array):
            extended = defaultdict(float)
            for (u, good), mass in states.items():
                for q, lam, weight in table.get(u, ()):
                    is_contracting = abs(lam) <= threshold
                    extended[(u + q, good + is_contracting)] += weight * mass
                    terms += 1
                    contracting_terms += is_contracting
            states = dict(extended)

        exceptional_mass = sum(mass for (_, good), mass in states.items() if good < c4 * r)
        reference = math.exp(-c4 * k)
        lengths = [b - a for a, b in zip(boundaries, boundaries[1:])]

        return {
            'k': k,
            'p': p,
            'xi': xi,
            'segmentation': list(boundaries[1:]),
            'exceptional_mass': exceptional_mass,
            'reference': reference,
            'within_reference': exceptional_mass <= reference,
            'lengths_within_c3': max(lengths) <= 1 / c3,
            'contracting_fraction': contracting_terms / terms if terms else 0.0,
            'implied_bound': math.exp(-c3 * c4 ** 2 * k) + reference,
        }

    @staticmethod
    def root_sum_magnitude(b) -> dict:
        """
        |sum_j exp(2 pi i b_j)| directly and as sqrt(t^2 - 4 sum_(j<l) sin^2 pi (b_j - b_l)).

        :param b: sequence of reals in [0, 1)
        :return: dict, direct, identity, relative_error
        """

        b = np.asarray(b, dtype=np.float64)
        t = b.size
        direct = float(abs(np.exp(2j * np.pi * b).sum()))

        differences = b[:, None] - b[None, :]
        # the full matrix counts every pair twice and has a zero diagonal
        pair_sum = float((np.sin(np.pi * differences) ** 2).sum()) / 2.0
        identity = math.sqrt(max(t * t - 4.0 * pair_sum, 0.0))
        scale = max(direct, identity, 1.0)

        return {'direct': direct, 'identity': identity, 'relative_error': abs(direct - identity) / scale}
