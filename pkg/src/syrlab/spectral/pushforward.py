# File: pushforward.py
# Description: The pushforward of the geometric measure under Syr_{k,p}, exact and Monte Carlo.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import math
import time
from fractions import Fraction

import numpy as np

from syrlab.codes.syracuse_code import SyracuseCode
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.errors import EnumerationLimitError
from syrlab.experiment.config import ExperimentConfig
from syrlab.experiment.parallel import ParallelRunner
from syrlab.geometric.geom_params import GeomParams, GeometricSampler
from syrlab.spectral.measure import MeasureZ2p, Spectral


_logger = logging.getLogger(__name__)


def _suffix_sums(codes: np.ndarray) -> np.ndarray:
    """
    :param codes: np.ndarray, shape (n, k)
    :return: np.ndarray, column i - 1 holds x_[i,k]
    """

    return np.cumsum(codes[:, ::-1], axis=1)[:, ::-1]


def table_width(mu, k: int) -> int:
    """
    Largest suffix sum covered by the precomputed window tables; larger sums take the slow path.
    """

    mu = float(mu)
    return int(math.ceil(k * mu + 12.0 * math.sqrt(k * mu * (mu - 1.0)) + 64))


def _pushforward_shard(payload: dict, count: int, seed_sequence) -> np.ndarray:
    params = GeomParams(payload['mu'])
    sampler = GeometricSampler(params, np.random.default_rng(seed_sequence))
    k, p, smax = payload['k'], payload['p'], payload['smax']
    tables = payload['tables']
    modulus = 1 << p

    codes = sampler.sample_matrix(count, k)
    suffix = _suffix_sums(codes)
    inside = suffix[:, 0] <= smax

    # uint64 arithmetic wraps modulo 2^64, which 2^p divides
    total = np.zeros(count, dtype=np.uint64)
    clipped = np.minimum(suffix, smax)
    for i in range(k):
        total += tables[i][clipped[:, i]].astype(np.uint64)
    residues = ((total * np.uint64(payload['factor'])) & np.uint64(modulus - 1)).astype(np.int64)

    outside = np.flatnonzero(~inside)
    if outside.size:
        array = payload['array'].copy()
        for row in outside:
            code = SyracuseCode(tuple(int(x) for x in codes[row]))
            residues[row] = Pushforward.syr_k_p(code, p, array)

    return np.bincount(residues, minlength=modulus).astype(np.int64)


class Pushforward:
    """
    The measure S_{k,p,mu}: the law of Syr_{k,p}(x_1, ..., x_k) for i.i.d. geometric x_i with mean mu.
    """

    @staticmethod
    def syr_k_p(code, p: int, array: CoeffArray) -> int:
        """
        -3^k sum_i sum_(j<p) a_(j+x_[i,k],i) 2^j mod 2^p.

        :param code: SyracuseCode or sequence
        :param p: int, at least 1
        :param array: CoeffArray
        :return: int, in [0, 2^p)
        """

        if p < 1:
            raise ValueError('p must be at least 1')

        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        modulus = 1 << p
        total = sum(array.window(i, code.suffix(i), p) for i in range(1, code.k + 1))

        return (-(3 ** code.k) * total) % modulus

    @staticmethod
    def residue_counts(first_row: int, last_row: int, p: int, smax: int, offset: int = 0,
                       array: CoeffArray = None) -> np.ndarray:
        """
        Count the compositions (x_first, ..., x_last) by total s and residue sum_l m_l(x_[l,last] + offset) mod 2^p.

        Built from the last row upward: a code with suffix sum s at row i extends one with suffix sum s' < s
        at row i + 1, and the window of row i at column s + offset is added to its residue.

        :param first_row: int, first row, at least 1
        :param last_row: int, last row, at least first_row
        :param p: int, window width
        :param smax: int, largest total
        :param offset: int, added to every suffix sum
        :param array: CoeffArray, optional shared array
        :return: np.ndarray, object array of Python ints, shape (smax + 1, 2^p), indexed [s, r]
        """

        if not 1 <= first_row <= last_row:
            raise ValueError('need 1 <= first_row <= last_row')
        if offset < 0:
            raise ValueError('offset must be nonnegative')

        array = array if array is not None else CoeffArray()
        size = 1 << p
        windows = {i: array.window_table(i, p, smax + offset) for i in range(first_row, last_row + 1)}

        counts = np.zeros((smax + 1, size), dtype=object)
        counts.fill(0)
        length = last_row - first_row + 1
        for s in range(1, smax - length + 2):
            counts[s, windows[last_row][s + offset]] = 1

        for i in range(last_row - 1, first_row - 1, -1):
            exclusive = np.zeros_like(counts)
            exclusive.fill(0)
            exclusive[1:] = np.cumsum(counts, axis=0)[:-1]
            updated = np.zeros_like(counts)
            updated.fill(0)
            for s in range(last_row - i + 1, smax - (i - first_row) + 1):
                updated[s] = np.roll(exclusive[s], int(windows[i][s + offset]))
            counts = updated

        return counts

    @staticmethod
    def _negated_power(k: int, p: int) -> int:
        modulus = 1 << p
        return (-pow(3, k, modulus)) % modulus

    @staticmethod
    def _check_rational(mu) -> Fraction:
        params = GeomParams(mu)
        if not params.is_exact:
            raise ValueError('exact pushforward needs a rational mu')
        return params.mu

    @staticmethod
    def pushforward_exact(mu, k: int, p: int, n_max: int = None, state_cap: int = 50_000_000,
                          array: CoeffArray = None) -> MeasureZ2p:
        """
        Exact masses of all codes with x_[1,k] <= n_max; the rest of the measure is the tail.

        Counts codes per (suffix sum, partial residue) from row k down to row 1, then weighs each total n
        by mu^-k (1 - 1/mu)^(n-k).

        :param mu: rational mean
        :param k: int, at least 1
        :param p: int, at least 1
        :param n_max: int, cutoff, default k + ceil(10 mu) + 30
        :param state_cap: int, largest number of count cells
        :param array: CoeffArray, optional shared array
        :return: MeasureZ2p, exact

        :raises ValueError: if mu is not rational or n_max < k
        :raises EnumerationLimitError: if the table exceeds state_cap
        """

        mu = Pushforward._check_rational(mu)
        if k < 1 or p < 1:
            raise ValueError('k and p must be at least 1')
        if n_max is None:
            n_max = k + math.ceil(10 * mu) + 30
        if n_max < k:
            raise ValueError('n_max must be at least k')

        size = 1 << p
        cells = k * (n_max + 1) * size
        if cells > state_cap:
            raise EnumerationLimitError(f'{cells} count cells exceed the cap of {state_cap}')

        started = time.perf_counter()
        array = array if array is not None else CoeffArray()
        counts = Pushforward.residue_counts(1, k, p, n_max, 0, array)

        weight = (1 - 1 / mu)
        factor = Pushforward._negated_power(k, p)
        mass = [Fraction(0)] * size
        assigned = Fraction(0)
        for n in range(k, n_max + 1):
            cylinder = (1 / mu) ** k * weight ** (n - k)
            for r in range(size):
                count = counts[n, r]
                if count:
                    contribution = count * cylinder
                    mass[(factor * r) % size] += contribution
                    assigned += contribution

        measure = MeasureZ2p(p, mass, 1 - assigned)
        _logger.info('exact pushforward mu=%s k=%d p=%d n_max=%d in %.2f s, tail %.3g',
                     mu, k, p, n_max, time.perf_counter() - started, float(measure.tail_mass))

        return measure

    @staticmethod
    def pushforward_limit(mu, k: int, p: int, state_cap: int = 50_000_000, array: CoeffArray = None) -> MeasureZ2p:
        """
        The exact measure without cutoff.

        Row i is periodic with period 2 * 3^(i-1), so the windows depend only on suffix sums modulo
        L = 2 * 3^(k-1); the geometric weights are summed over each class in closed form.

        :param mu: rational mean
        :param k: int, at least 1
        :param p: int, at least 1
        :return: MeasureZ2p, exact, zero tail
        """

        mu = Pushforward._check_rational(mu)
        if k < 1 or p < 1:
            raise ValueError('k and p must be at least 1')

        size = 1 << p
        period = CoeffArray.row_period(k)
        cells = k * period * size
        if cells > state_cap:
            raise EnumerationLimitError(f'{cells} residue-class cells exceed the cap of {state_cap}')

        array = array if array is not None else CoeffArray()
        windows = [array.window_table(i, p, period) for i in range(1, k + 1)]
        lam = 1 - 1 / mu
        lam_period = lam ** period
        scale = (1 / mu) / (1 - lam_period)

        # classes c = 1..period stand for all suffix sums s = c mod period
        state = np.zeros((period + 1, size), dtype=object)
        state.fill(Fraction(0))
        for c in range(1, period + 1):
            state[c, windows[k - 1][c]] += scale * lam ** (c - 1)

        for i in range(k - 1, 0, -1):
            # h[c] = sum over d = 1..period of lam^(d-1) state[c - d], indices taken mod period
            h = np.zeros_like(state)
            h.fill(Fraction(0))
            h_current = np.zeros(size, dtype=object)
            h_current.fill(Fraction(0))
            for d in range(1, period + 1):
                source = (1 - d) % period or period
                h_current = h_current + lam ** (d - 1) * state[source]
            h[1] = h_current
            for c in range(1, period):
                h[c + 1] = state[c] * (1 - lam_period) + lam * h[c]

            updated = np.zeros_like(state)
            updated.fill(Fraction(0))
            for c in range(1, period + 1):
                updated[c] = np.roll(h[c] * scale, int(windows[i - 1][c]))
            state = updated

        factor = Pushforward._negated_power(k, p)
        residue_mass = state[1:].sum(axis=0)
        mass = [Fraction(0)] * size
        for r in range(size):
            mass[(factor * r) % size] += residue_mass[r]

        return MeasureZ2p(p, mass, 0)

    @staticmethod
    def mc_payload(mu, k: int, p: int, array: CoeffArray = None) -> dict:
        """
        Read-only input shared by the Monte Carlo shards: window tables up to the table width and a frozen array.
        """

        smax = table_width(mu, k)
        array = array.copy() if array is not None else CoeffArray()
        array.freeze(smax + p + 1, k)
        payload = {
            'mu': float(mu),
            'k': k,
            'p': p,
            'smax': smax,
            'tables': [array.window_table(i, p, smax) for i in range(1, k + 1)],
            'factor': Pushforward._negated_power(k, p),
            'array': array,
        }
        return payload

    @staticmethod
    def pushforward_mc(mu, k: int, p: int, nsamples: int, seed: int, threads: int = None,
                       shard_size: int = 16384, array: CoeffArray = None) -> MeasureZ2p:
        """
        Empirical histogram of Syr_{k,p} over sampled codes; deterministic per seed and independent of threads.

        :return: MeasureZ2p, float, with per-bin standard errors
        """

        if nsamples < 1:
            raise ValueError('nsamples must be at least 1')
        if not 1 <= p <= 30:
            raise ValueError('p must lie in [1, 30]')

        started = time.perf_counter()
        payload = Pushforward.mc_payload(mu, k, p, array)
        partials = ParallelRunner.run_sharded(_pushforward_shard, payload, nsamples, seed, shard_size, threads)
        counts = np.sum(partials, axis=0)
        _logger.info('Monte Carlo pushforward mu=%s k=%d p=%d n=%d in %.2f s',
                     mu, k, p, nsamples, time.perf_counter() - started)

        return MeasureZ2p.from_counts(p, counts)

    @staticmethod
    def measure_for_mode(mode: str, config: ExperimentConfig, k: int = None, p: int = None,
                         array: CoeffArray = None) -> MeasureZ2p:
        """
        :param mode: str, 'exact', 'limit' or 'mc'
        """

        k = config.k if k is None else k
        p = config.p if p is None else p
        if mode == 'exact':
            measure = Pushforward.pushforward_exact(config.mu, k, p, config.resolved_n_max(k), config.state_cap, array)
        elif mode == 'limit':
            measure = Pushforward.pushforward_limit(config.mu, k, p, config.state_cap, array)
        elif mode == 'mc':
            measure = Pushforward.pushforward_mc(config.mu, k, p, config.nsamples, config.seed, config.threads,
                                                 config.shard_size, array)
        else:
            raise ValueError("mode must be 'exact', 'limit' or 'mc'")

        return measure

    @staticmethod
    def spectral_scan(mu, k: int, p: int, mode: str, config: ExperimentConfig = None,
                      array: CoeffArray = None) -> dict:
        """
        Largest nonzero Fourier modulus of the pushforward and the exponent c2 = -log2(max) / k it suggests.

        :param mode: str, 'exact', 'limit' or 'mc'
        :param config: ExperimentConfig, source of n_max, samples, seed and threads
        :return: dict, max_nonzero_xi_modulus, argmax, c2_estimate, spectrum rows
        """

        config = (config or ExperimentConfig()).with_overrides(mu=Fraction(mu), k=k, p=p)
        measure = Pushforward.measure_for_mode(mode, config, k, p, array)
        spectrum = Spectral.dft(measure)
        maximum, argmax = spectrum.max_nonzero()
        bound_sum = Spectral.inversion_bound(spectrum, measure)

        estimate = -math.log2(maximum) / k if maximum > 0 else math.inf
        rows = [{'xi': xi, 're': float(value.real), 'im': float(value.imag), 'modulus': float(abs(value))}
                for xi, value in enumerate(spectrum.values)]
        result = {
            'mode': mode,
            'mu': str(config.mu),
            'k': k,
            'p': p,
            'max_nonzero_xi_modulus': maximum,
            'argmax': argmax,
            'c2_estimate': estimate,
            'within_c2_bound': maximum <= 2.0 ** (-config.c2 * k),
            'nonzero_modulus_sum': bound_sum,
            'tail_mass': float(measure.tail_mass),
            'rows': rows,
        }
        return result
