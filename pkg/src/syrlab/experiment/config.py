# File: config.py
# Description: Experiment configuration with documented defaults and a key = value file format.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import dataclasses
import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from syrlab.errors import ConfigError


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Every free constant of the experiments, serialized with each report.

    Attributes:
        mu: mean of the geometric distribution, rational
        k: number of Syracuse steps
        p: modulus exponent
        c0, c1, c2, c3, c4: thresholds of the uniformity, spectral and segment statements
        alpha: descent exponent, in (0, 1/2)
        c: density margin of the path-bit statement
        c_window: density margin of the constant-window statement, independent of c
        M, mprime: window size and the segment lower bound M' >= M^2
        nprime, ndoubleprime: digit split of xi, n'' > n'
        segmentation: k_1 < ... < k_r = k, empty for a single segment
        n_max: exact enumeration cutoff, 0 selects k + ceil(10 mu) + 30
        nsamples, seed: Monte Carlo sample count and root seed
        threads: worker count, 0 defers to SYRLAB_THREADS and then the hardware
        state_cap: largest exact state table
        p_cap: largest p for dense measures
        shard_size: Monte Carlo samples per shard
    """

    mu: Fraction = Fraction(2)
    k: int = 8
    p: int = 4
    c0: float = 0.1
    c1: float = 1.0
    c2: float = 0.05
    c3: float = 0.25
    c4: float = 0.05
    alpha: Fraction = Fraction(1, 5)
    c: float = 0.05
    c_window: float = 0.05
    M: int = 2
    mprime: int = 4
    nprime: int = 3
    ndoubleprime: int = 6
    segmentation: tuple = ()
    n_max: int = 0
    nsamples: int = 100000
    seed: int = 0
    threads: int = 0
    state_cap: int = 50_000_000
    p_cap: int = 24
    shard_size: int = 16384

    def __post_init__(self) -> None:
        object.__setattr__(self, 'mu', Fraction(self.mu))
        object.__setattr__(self, 'alpha', Fraction(self.alpha))
        object.__setattr__(self, 'segmentation', tuple(int(t) for t in self.segmentation))
        self._validate()

    def _validate(self) -> None:
        if self.mu <= 1:
            raise ConfigError('mu must exceed 1', key='mu')
        if self.k < 1:
            raise ConfigError('k must be at least 1', key='k')
        if not 1 <= self.p <= self.p_cap:
            raise ConfigError(f'p must lie in [1, {self.p_cap}]', key='p')
        for name in ('c0', 'c1', 'c2', 'c3', 'c4', 'c', 'c_window'):
            if not getattr(self, name) > 0:
                raise ConfigError(f'{name} must be positive', key=name)
        if not 0 < self.alpha < Fraction(1, 2):
            raise ConfigError('alpha must lie in (0, 1/2)', key='alpha')
        if self.M < 1 or self.mprime < self.M ** 2:
            raise ConfigError('need M >= 1 and mprime >= M^2', key='mprime')
        if not 1 <= self.nprime < self.ndoubleprime:
            raise ConfigError('need 1 <= nprime < ndoubleprime', key='ndoubleprime')
        if self.segmentation:
            is_increasing = all(a < b for a, b in zip(self.segmentation, self.segmentation[1:]))
            if not is_increasing or self.segmentation[0] < 1 or self.segmentation[-1] != self.k:
                raise ConfigError('segmentation must be strictly increasing, positive and end at k', key='segmentation')
        for name in ('n_max', 'seed', 'threads'):
            if getattr(self, name) < 0:
                raise ConfigError(f'{name} must be nonnegative', key=name)
        for name in ('nsamples', 'state_cap', 'shard_size'):
            if getattr(self, name) < 1:
                raise ConfigError(f'{name} must be positive', key=name)

    def resolved_n_max(self, k: int = None, mu=None) -> int:
        """
        :return: int, n_max, or k + ceil(10 mu) + 30 when n_max is 0
        """

        if self.n_max:
            return self.n_max
        k = self.k if k is None else k
        mu = self.mu if mu is None else Fraction(mu)
        return k + math.ceil(10 * mu) + 30

    def resolved_segmentation(self) -> tuple:
        return self.segmentation or (self.k,)

    def with_overrides(self, **overrides) -> 'ExperimentConfig':
        """
        :param overrides: field values; None leaves the field unchanged
        :return: ExperimentConfig
        """

        values = {key: value for key, value in overrides.items() if value is not None}
        unknown = set(values) - {field.name for field in dataclasses.fields(self)}
        if unknown:
            raise ConfigError(f'unknown configuration key {sorted(unknown)[0]}', key=sorted(unknown)[0])

        return dataclasses.replace(self, **values)

    def to_dict(self) -> dict:
        """
        :return: dict, JSON-ready values with rationals as 'p/q' strings
        """

        values = dict()
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if isinstance(value, Fraction):
                value = str(value)
            elif isinstance(value, tuple):
                value = list(value)
            values[field.name] = value

        return values


def _parse_value(field: dataclasses.Field, text: str):
    default = field.default
    if isinstance(default, Fraction):
        return Fraction(text)
    if isinstance(default, tuple):
        return tuple(int(part) for part in text.split(',') if part.strip())
    if isinstance(default, float):
        return float(text)
    if isinstance(default, int):
        return int(text.replace('_', ''))
    raise TypeError(f'no parser for field {field.name}')


def load_config(path: str) -> ExperimentConfig:
    """
    Read a configuration file: one key = value per line, # starts a comment.

    :param path: str, path to the file
    :return: ExperimentConfig, defaults for absent keys

    :raises FileNotFoundError: if the file is not found
    :raises ConfigError: on a malformed line, an unknown key or a bad value
    """

    if not os.path.isfile(path):
        raise FileNotFoundError('config file not found')

    fields = {field.name: field for field in dataclasses.fields(ExperimentConfig)}
    values = dict()
    with open(path, 'r') as file_handle:
        for line_number, raw_line in enumerate(file_handle, start=1):
            line = raw_line.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigError("expected 'key = value'", path, line_number)

            key, text = (part.strip() for part in line.split('=', 1))
            if key not in fields:
                raise ConfigError(f'unknown configuration key {key}', path, line_number, key)
            try:
                values[key] = _parse_value(fields[key], text)
            except (ValueError, ZeroDivisionError):
                raise ConfigError(f'bad value for {key}: {text!r}', path, line_number, key)

    _logger.debug('loaded %d configuration values from %s', len(values), path)
    try:
        config = ExperimentConfig(**values)
    except ConfigError as error:
        raise ConfigError(str(error), path, key=error.key)

    return config
