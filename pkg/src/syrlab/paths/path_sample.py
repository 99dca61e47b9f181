# File: path_sample.py
# Description: Bits of the coefficient array along suffix-sum paths and their density statistics.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.stats import norm

from syrlab.codes.syracuse_code import SyracuseCode
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.experiment.parallel import ParallelRunner
from syrlab.geometric.geom_params import GeomParams, GeometricSampler
from syrlab.paths.residue_algebra import ResidueAlgebra
from syrlab.spectral.pushforward import table_width


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathSample:
    """
    The path (l, x_[l,k] + p), l = 1..k, of a code through the coefficient array.
    """

    code: SyracuseCode
    suffix_sums: tuple
    p_offset: int

    def __post_init__(self) -> None:
        if self.p_offset < 0:
            raise ValueError('p must be nonnegative')
        if len(self.suffix_sums) != self.code.k:
            raise ValueError('one suffix sum per row is required')
        is_decreasing = all(a > b for a, b in zip(self.suffix_sums, self.suffix_sums[1:]))
        if not is_decreasing or self.suffix_sums[-1] < 1:
            raise ValueError('suffix sums must be positive and strictly decreasing')

    @staticmethod
    def from_code(code, p: int) -> 'PathSample':
        code = code if isinstance(code, SyracuseCode) else SyracuseCode(tuple(code))
        return PathSample(code, code.suffix_sums[:-1], p)

    def columns(self) -> tuple:
        """
        :return: tuple, column x_[l,k] + p visited at row l
        """

        return tuple(s + self.p_offset for s in self.suffix_sums)


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple:
    """
    Wilson score interval of a binomial proportion.

    :param successes: int, number of successes
    :param trials: int, number of trials, at least 1
    :param confidence: float, coverage level
    :return: tuple, (low, high)
    """

    if trials < 1:
        raise ValueError('trials must be positive')

    z = float(norm.ppf(0.5 + confidence / 2.0))
    phat = successes / trials
    denominator = 1.0 + z * z / trials
    center = (phat + z * z / (2.0 * trials)) / denominator
    half_width = z * math.sqrt(phat * (1.0 - phat) / trials + z * z / (4.0 * trials * trials)) / denominator

    return max(0.0, center - half_width), min(1.0, center + half_width)


def _sample_batch(payload: dict, count: int, seed_sequence):
    params = GeomParams(payload['mu'])
    sampler = GeometricSampler(params, np.random.default_rng(seed_sequence))
    codes = sampler.sample_matrix(count, payload['k'])
    suffix = np.cumsum(codes[:, ::-1], axis=1)[:, ::-1]
    inside = suffix[:, 0] <= payload['smax']
    return codes, suffix, inside


def _density_shard(payload: dict, count: int, seed_sequence) -> np.ndarray:
    k, p, c = payload['k'], payload['p'], payload['c']
    codes, suffix, inside = _sample_batch(payload, count, seed_sequence)

    tables = payload['tables']
    rows = np.arange(k)[None, :]
    columns = np.minimum(suffix, payload['smax']) + p
    bits = tables[rows, columns]
    ones = bits.sum(axis=1).astype(np.float64)

    outside = np.flatnonzero(~inside)
    if outside.size:
        array = payload['array'].copy()
        for row in outside:
            code = SyracuseCode(tuple(int(x) for x in codes[row]))
            ones[row] = sum(PathDensity.bits_along_path(array, code, p))

    rho1 = ones / k
    rho0 = 1.0 - rho1
    zero_exceptional = rho0 > 1.0 - c
    one_exceptional = rho1 > 1.0 - c

    return np.array([count, zero_exceptional.sum(), one_exceptional.sum(),
                     (zero_exceptional | one_exceptional).sum()], dtype=np.int64)


def _window_shard(payload: dict, count: int, seed_sequence) -> np.ndarray:
    k, p, c, M = payload['k'], payload['p'], payload['c'], payload['M']
    codes, suffix, inside = _sample_batch(payload, count, seed_sequence)

    tables = payload['tables']
    columns = np.minimum(suffix, payload['smax']) + p
    holding = np.zeros(count, dtype=np.int64)
    for ell in range(k):
        base = tables[ell, columns[:, ell]]
        is_constant = np.ones(count, dtype=bool)
        for v in range(M + 1):
            for u in range(1, M + 1):
                is_constant &= tables[ell + v, columns[:, ell] + u] == base
        holding += is_constant

    density = holding / k
    outside = np.flatnonzero(~inside)
    if outside.size:
        array = payload['array'].copy()
        for row in outside:
            code = SyracuseCode(tuple(int(x) for x in codes[row]))
            density[row] = float(PathDensity.window_density(array, code, p, M))

    exceptional = density > 1.0 - c
    return np.array([count, exceptional.sum()], dtype=np.int64)


class PathDensity:
    """
    Path bits a_(x_[l,k] + p, l) and the window condition along random geometric codes.
    """

    @staticmethod
    def bits_along_path(array: CoeffArray, code, p: int) -> tuple:
        """
        :param array: CoeffArray
        :param code: SyracuseCode or sequence
        :param p: int, column offset, at least 0
        :return: tuple, (a_(x_[l,k] + p, l)) for l = 1..k
        """

        path = PathSample.from_code(code, p)
        return tuple(array.coeff(column, ell) for ell, column in enumerate(path.columns(), start=1))

    @staticmethod
    def zero_one_density(bits) -> tuple:
        """
        :param bits: sequence of 0 and 1, nonempty
        :return: tuple, (fraction of zeros, fraction of ones) as Fractions
        """

        bits = tuple(bits)
        if not bits:
            raise ValueError('bits must be nonempty')
        if any(bit not in (0, 1) for bit in bits):
            raise ValueError('bits must be 0 or 1')

        ones = sum(bits)
        return Fraction(len(bits) - ones, len(bits)), Fraction(ones, len(bits))

    @staticmethod
    def window_density(array: CoeffArray, code, p: int, M: int) -> Fraction:
        """
        Fraction of rows l <= k at which the constant-window condition holds with n = x_[l,k].
        """

        path = PathSample.from_code(code, p)
        holding = sum(ResidueAlgebra.constant_window_check(array, n, ell, M, p)
                      for ell, n in enumerate(path.suffix_sums, start=1))
        return Fraction(holding, path.code.k)

    @staticmethod
    def _payload(mu, k: int, p: int, c: float, extra_rows: int, extra_cols: int) -> dict:
        smax = table_width(mu, k)
        width = smax + p + extra_cols + 2
        array = CoeffArray().freeze(width, k + extra_rows)
        return {
            'mu': float(mu),
            'k': k,
            'p': p,
            'c': c,
            'smax': smax,
            'tables': array.dump(k + extra_rows, width),
            'array': array,
        }

    @staticmethod
    def density_tail_experiment(mu, k: int, p: int, c: float, nsamples: int, seed: int, threads: int = None,
                                shard_size: int = 16384) -> dict:
        """
        Monte Carlo estimate of the measure of codes whose path has zero density (or one density) above 1 - c.

        :param mu: mean of the geometric law
        :param k: int, path length
        :param p: int, column offset
        :param c: float, margin in (0, 1)
        :param nsamples: int, number of codes
        :param seed: int, root seed
        :return: dict, exceptional fractions with Wilson intervals and the e^-ck reference
        """

        if not 0 < c < 1:
            raise ValueError('c must lie in (0, 1)')
        if k < 1 or p < 0 or nsamples < 1:
            raise ValueError('need k >= 1, p >= 0 and nsamples >= 1')

        started = time.perf_counter()
        payload = PathDensity._payload(mu, k, p, c, 0, 0)
        partials = ParallelRunner.run_sharded(_density_shard, payload, nsamples, seed, shard_size, threads)
        total, zeros, ones, either = (int(value) for value in np.sum(partials, axis=0))
        _logger.info('path density mu=%s k=%d p=%d n=%d in %.2f s', mu, k, p, nsamples,
                     time.perf_counter() - started)

        ci_low, ci_high = wilson_interval(either, total)
        return {
            'mu': str(mu),
            'k': k,
            'p': p,
            'c': c,
            'nsamples': total,
            'seed': seed,
            'frac_exceptional': either / total,
            'frac_zero_exceptional': zeros / total,
            'frac_one_exceptional': ones / total,
            'ci_low': ci_low,
            'ci_high': ci_high,
            'zero_ci': wilson_interval(zeros, total),
            'one_ci': wilson_interval(ones, total),
            'e_to_minus_ck_reference': math.exp(-c * k),
        }

    @staticmethod
    def conjecture_4_12_experiment(mu, k: int, p: int, M: int, c: float, nsamples: int, seed: int,
                                   threads: int = None, shard_size: int = 16384) -> dict:
        """
        Monte Carlo estimate of the measure of codes along whose path the constant-window condition holds
        at more than a 1 - c fraction of the rows.
        """

        if not 0 < c < 1:
            raise ValueError('c must lie in (0, 1)')
        if M < 1:
            raise ValueError('M must be at least 1')
        if k < 1 or p < 0 or nsamples < 1:
            raise ValueError('need k >= 1, p >= 0 and nsamples >= 1')

        started = time.perf_counter()
        payload = PathDensity._payload(mu, k, p, c, M, M)
        payload['M'] = M
        partials = ParallelRunner.run_sharded(_window_shard, payload, nsamples, seed, shard_size, threads)
        total, exceptional = (int(value) for value in np.sum(partials, axis=0))
        _logger.info('window density mu=%s k=%d p=%d M=%d n=%d in %.2f s', mu, k, p, M, nsamples,
                     time.perf_counter() - started)

        ci_low, ci_high = wilson_interval(exceptional, total)
        return {
            'mu': str(mu),
            'k': k,
            'p': p,
            'M': M,
            'c': c,
            'nsamples': total,
            'seed': seed,
            'frac_exceptional': exceptional / total,
            'ci_low': ci_low,
            'ci_high': ci_high,
            'e_to_minus_ck_reference': math.exp(-c * k),
        }
