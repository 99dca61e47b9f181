# File: geom_params.py
# Description: Geometric distribution parameters and the seeded inverse-CDF sampler.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from syrlab.codes.syracuse_code import SyracuseCode


def _as_mu(mu) -> Union[Fraction, float]:
    if isinstance(mu, bool):
        raise TypeError('mu must be a number')
    if isinstance(mu, (int, str, Fraction)):
        return Fraction(mu)
    if isinstance(mu, float):
        return mu
    raise TypeError('mu must be int, float, str or Fraction')


@dataclass(frozen=True)
class GeomParams:
    """
    Geometric distribution on positive integers with mean mu: P(x = m) = lam^(m-1) (1 - lam), lam = 1 - 1/mu.

    Rational mu (int, str or Fraction) enables exact measures; float mu is sampling and float arithmetic only.
    """

    mu: Union[Fraction, float]
    seed: int = 0

    def __post_init__(self) -> None:
        mu = _as_mu(self.mu)
        if not mu > 1:
            raise ValueError('mu must exceed 1')
        if not 0 <= self.seed < 1 << 64:
            raise ValueError('seed must be a 64-bit unsigned value')
        object.__setattr__(self, 'mu', mu)

    @property
    def lam(self) -> Union[Fraction, float]:
        return 1 - 1 / self.mu

    @property
    def is_exact(self) -> bool:
        return isinstance(self.mu, Fraction)

    def probability(self, m: int) -> Union[Fraction, float]:
        """
        :param m: int, at least 1
        :return: P(x = m)
        """

        if m < 1:
            return 0
        return self.lam ** (m - 1) / self.mu

    def generator(self, spawn_key: tuple = ()) -> np.random.Generator:
        """
        :param spawn_key: tuple, identifies an independent substream of the seed
        :return: np.random.Generator
        """

        seed_sequence = np.random.SeedSequence(self.seed, spawn_key=spawn_key)
        return np.random.default_rng(seed_sequence)


class GeometricSampler:
    """
    Draws geometric variates by inverse CDF, x = 1 + floor(log(1 - u) / log(lam)), from one uniform per draw.

    The stream is determined by the parameters' seed and spawn key, so draw number t is reproducible.
    """

    def __init__(self, params: GeomParams, rng: np.random.Generator = None) -> None:
        self.params = params
        self._rng = rng if rng is not None else params.generator()
        self._log_lam = float(np.log(float(params.lam)))

    def _from_uniform(self, u: np.ndarray) -> np.ndarray:
        ratio = np.log1p(-u) / self._log_lam
        draws = 1 + np.floor(ratio).astype(np.int64)
        return draws

    def sample_x(self) -> int:
        """
        :return: int, one geometric draw
        """

        return int(self._from_uniform(self._rng.random(1))[0])

    def sample_matrix(self, nrows: int, k: int) -> np.ndarray:
        """
        :param nrows: int, number of codes
        :param k: int, code length
        :return: np.ndarray, int64 array of shape (nrows, k), row-major draw order
        """

        if k < 1:
            raise ValueError('code length must be at least 1')
        uniforms = self._rng.random((nrows, k))
        return self._from_uniform(uniforms)

    def sample_code(self, k: int) -> SyracuseCode:
        """
        :param k: int, code length
        :return: SyracuseCode, k independent draws
        """

        return SyracuseCode(tuple(int(x) for x in self.sample_matrix(1, k)[0]))

    def sample_sums(self, k: int, nsamples: int) -> np.ndarray:
        """
        Draws of x_[1,k] straight from its law: k plus a negative binomial count of failures.

        :param k: int, number of summands
        :param nsamples: int, number of draws
        :return: np.ndarray, int64
        """

        success = 1.0 / float(self.params.mu)
        failures = self._rng.negative_binomial(k, success, size=nsamples)
        return k + failures.astype(np.int64)
