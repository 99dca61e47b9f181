# File: clt.py
# Description: Statement-level check of the central limit behaviour of x_[1,k].
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import math

import numpy as np
from scipy.stats import kstest, norm

from syrlab.geometric.geom_params import GeomParams, GeometricSampler


_logger = logging.getLogger(__name__)


class CentralLimit:
    """
    Distance between the law of (x_[1,k] - k mu) / sqrt(k) and the centred normal with variance mu (mu - 1).
    """

    @staticmethod
    def _standardized(params: GeomParams, k: int, nsamples: int, method: str) -> np.ndarray:
        sampler = GeometricSampler(params)
        if method == 'sums':
            sums = sampler.sample_sums(k, nsamples)
        elif method == 'draws':
            sums = np.zeros(nsamples, dtype=np.int64)
            chunk = max(1, 1_000_000 // k)
            for start in range(0, nsamples, chunk):
                rows = min(chunk, nsamples - start)
                sums[start:start + rows] = sampler.sample_matrix(rows, k).sum(axis=1)
        else:
            raise ValueError("method must be 'sums' or 'draws'")

        mu = float(params.mu)
        return (sums - k * mu) / math.sqrt(k)

    @staticmethod
    def clt_check(params: GeomParams, k: int, nsamples: int, method: str = 'sums') -> dict:
        """
        :param params: GeomParams
        :param k: int, number of summands
        :param nsamples: int, number of sampled codes
        :param method: str, 'sums' draws x_[1,k] from its negative binomial law, 'draws' sums k geometric draws
        :return: dict, sup_cdf_distance, mean, variance and the reference variance
        """

        if k < 1 or nsamples < 1:
            raise ValueError('k and nsamples must be positive')

        values = CentralLimit._standardized(params, k, nsamples, method)
        mu = float(params.mu)
        variance = mu * (mu - 1.0)
        statistic = kstest(values, norm(loc=0.0, scale=math.sqrt(variance)).cdf).statistic

        result = {
            'sup_cdf_distance': float(statistic),
            'sample_mean': float(values.mean() * math.sqrt(k) + k * mu),
            'sample_variance': float(values.var()),
            'reference_variance': variance,
            'k': k,
            'nsamples': nsamples,
        }
        _logger.info('clt check mu=%s k=%d n=%d: distance %.5f', params.mu, k, nsamples, statistic)

        return result

    @staticmethod
    def clt_table(params: GeomParams, k: int, nsamples: int, points: int = 81, method: str = 'sums') -> list:
        """
        Empirical and normal CDF on a grid of t, for plotting.

        :return: list, dict rows with keys t, empirical, normal
        """

        values = np.sort(CentralLimit._standardized(params, k, nsamples, method))
        mu = float(params.mu)
        scale = math.sqrt(mu * (mu - 1.0))
        grid = np.linspace(-4.0 * scale, 4.0 * scale, points)
        empirical = np.searchsorted(values, grid, side='right') / len(values)
        normal = norm(loc=0.0, scale=scale).cdf(grid)

        rows = [{'t': float(t), 'empirical': float(e), 'normal': float(q)}
                for t, e, q in zip(grid, empirical, normal)]
        return rows
