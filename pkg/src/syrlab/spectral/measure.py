# File: measure.py
# Description: Measures on Z/2^pZ, their Fourier transforms and distances to uniform.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from syrlab.errors import InvariantViolation


_FLOAT_TOLERANCE = 2.0 ** -40
_DIRECT_DFT_MAX_P = 8


class MeasureBacking(Enum):
    """
    Number representation behind a measure.
    """

    EXACT = 'EXACT'
    FLOAT = 'FLOAT'


@dataclass
class MeasureZ2p:
    """
    A sub-probability vector on Z/2^pZ plus the unassigned tail mass.

    Exact measures hold Fractions and satisfy sum(mass) + tail_mass = 1 exactly; float measures hold a
    float64 array and satisfy it within 2^-40. Monte Carlo measures also carry per-bin standard errors.
    """

    p: int
    mass: list
    tail_mass: object = 0
    stderr: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError('p must be nonnegative')
        if len(self.mass) != 1 << self.p:
            raise ValueError('mass must have 2^p entries')

        self._is_exact = not isinstance(self.mass, np.ndarray) and all(
            isinstance(value, (int, Fraction)) for value in self.mass)

        if self._is_exact:
            self.mass = [Fraction(value) for value in self.mass]
            self.tail_mass = Fraction(self.tail_mass)
            if min(self.mass) < 0 or self.tail_mass < 0:
                raise ValueError('masses must be nonnegative')
            if sum(self.mass) + self.tail_mass != 1:
                raise ValueError('masses and tail must sum to 1')
        else:
            self.mass = np.asarray(self.mass, dtype=np.float64)
            self.tail_mass = float(self.tail_mass)
            if abs(float(self.mass.sum()) + self.tail_mass - 1.0) > _FLOAT_TOLERANCE:
                raise ValueError('masses and tail must sum to 1')

    @property
    def is_exact(self) -> bool:
        return self._is_exact

    @property
    def backing(self) -> MeasureBacking:
        return MeasureBacking.EXACT if self.is_exact else MeasureBacking.FLOAT

    @property
    def size(self) -> int:
        return 1 << self.p

    def as_float(self) -> np.ndarray:
        return np.array([float(value) for value in self.mass], dtype=np.float64)

    @staticmethod
    def uniform(p: int, exact: bool = True) -> 'MeasureZ2p':
        size = 1 << p
        if exact:
            return MeasureZ2p(p, [Fraction(1, size)] * size)
        return MeasureZ2p(p, np.full(size, 1.0 / size))

    @staticmethod
    def point_mass(p: int, m: int, exact: bool = True) -> 'MeasureZ2p':
        size = 1 << p
        if exact:
            mass = [Fraction(0)] * size
            mass[m % size] = Fraction(1)
        else:
            mass = np.zeros(size)
            mass[m % size] = 1.0
        return MeasureZ2p(p, mass)

    @staticmethod
    def from_counts(p: int, counts: np.ndarray) -> 'MeasureZ2p':
        """
        Empirical measure of a histogram, with binomial standard errors per bin.
        """

        counts = np.asarray(counts, dtype=np.int64)
        total = int(counts.sum())
        if total < 1:
            raise ValueError('histogram is empty')

        frequencies = counts / total
        stderr = np.sqrt(frequencies * (1.0 - frequencies) / total)
        return MeasureZ2p(p, frequencies, 0.0, stderr)


@dataclass
class SpectrumZ2p:
    """
    values[xi] = sum_m mass(m) exp(-2 pi i m xi / 2^p); values[0] is the assigned mass.
    """

    p: int
    values: np.ndarray
    tail_mass: float = 0.0

    def nonzero_moduli(self) -> np.ndarray:
        return np.abs(self.values[1:])

    def max_nonzero(self) -> tuple:
        """
        :return: tuple, (max over xi != 0 of |values[xi]|, argmax xi); (0.0, None) for p = 0
        """

        moduli = self.nonzero_moduli()
        if moduli.size == 0:
            return 0.0, None
        index = int(np.argmax(moduli))
        return float(moduli[index]), index + 1


class Spectral:
    """
    Operations on measures and spectra over Z/2^pZ.
    """

    @staticmethod
    def uniformity_deviation(measure: MeasureZ2p) -> dict:
        """
        max_m |mass(m) - 2^-p| and the total variation distance to uniform.

        Exact measures also get certified envelopes: the true mass of a bin lies in [mass, mass + tail],
        and the true total variation is within tail/2 of the recorded one.

        :param measure: MeasureZ2p
        :return: dict, max_dev and tv, plus max_dev_envelope and tv_envelope for exact measures
        """

        if measure.is_exact:
            uniform = Fraction(1, measure.size)
            tail = measure.tail_mass
            deviations = [abs(value - uniform) for value in measure.mass]
            lower = [max(Fraction(0), value - uniform, uniform - value - tail) for value in measure.mass]
            upper = [max(abs(value - uniform), abs(value + tail - uniform)) for value in measure.mass]
            tv = sum(deviations) / 2
            result = {
                'max_dev': max(deviations),
                'tv': tv,
                'max_dev_envelope': (max(lower), max(upper)),
                'tv_envelope': (max(Fraction(0), tv - tail / 2), tv + tail / 2),
            }
        else:
            deviations = np.abs(measure.mass - 1.0 / measure.size)
            result = {
                'max_dev': float(deviations.max()),
                'tv': float(deviations.sum() / 2.0),
            }

        return result

    @staticmethod
    def set_probability(measure: MeasureZ2p, subset, k: int = None, c1: float = None) -> dict:
        """
        measure(Y) and its ratio to the uniform mass 2^-p #Y, with the 4k and (1 + c1)(2k + 2) reference bounds.

        :param measure: MeasureZ2p
        :param subset: iterable of residues
        :param k: int, optional, number of steps behind the measure
        :param c1: float, optional, uniformity constant
        :return: dict
        """

        members = sorted({int(m) for m in subset})
        if not members:
            raise ValueError('subset must be nonempty')
        if members[0] < 0 or members[-1] >= measure.size:
            raise ValueError('subset elements must lie in [0, 2^p)')

        probability = sum(measure.mass[m] for m in members)
        uniform_mass = Fraction(len(members), measure.size)
        if measure.is_exact:
            ratio = probability / uniform_mass
        else:
            probability = float(probability)
            ratio = probability / float(uniform_mass)

        result = {'probability': probability, 'ratio': ratio, 'size': len(members)}
        if k is not None:
            result['bound_4k'] = 4 * k
            result['within_4k'] = ratio <= 4 * k
            if c1 is not None:
                result['bound_2k_plus_2'] = (1 + c1) * (2 * k + 2)
                result['within_2k_plus_2'] = ratio <= (1 + c1) * (2 * k + 2)

        return result

    @staticmethod
    def dft_direct(mass: np.ndarray) -> np.ndarray:
        size = len(mass)
        indices = np.arange(size)
        kernel = np.exp(-2j * np.pi * np.outer(indices, indices) / size)
        return kernel @ mass

    @staticmethod
    def dft(measure: MeasureZ2p) -> SpectrumZ2p:
        """
        Forward transform with kernel exp(-2 pi i m xi / 2^p); direct summation for p <= 8, FFT above.
        """

        mass = measure.as_float()
        if measure.p <= _DIRECT_DFT_MAX_P:
            values = Spectral.dft_direct(mass)
        else:
            values = np.fft.fft(mass)

        return SpectrumZ2p(measure.p, values, float(measure.tail_mass))

    @staticmethod
    def invert(spectrum: SpectrumZ2p) -> MeasureZ2p:
        """
        Inverse transform back to a float measure.
        """

        mass = np.fft.ifft(spectrum.values).real
        mass = np.where(np.abs(mass) < _FLOAT_TOLERANCE, 0.0, mass)
        return MeasureZ2p(spectrum.p, mass, spectrum.tail_mass)

    @staticmethod
    def inversion_bound(spectrum: SpectrumZ2p, measure: MeasureZ2p = None) -> float:
        """
        sum over xi != 0 of |values[xi]|.

        With the measure given, also checks 2^p max_dev <= sum + tail, the inversion-formula bound.

        :raises InvariantViolation: if the bound fails
        """

        total = float(spectrum.nonzero_moduli().sum())
        if measure is not None:
            max_dev = float(Spectral.uniformity_deviation(measure)['max_dev'])
            if measure.size * max_dev > total + float(measure.tail_mass) + 1e-9:
                raise InvariantViolation('inversion bound failed',
                                         {'p': measure.p, 'scaled_max_dev': measure.size * max_dev, 'sum': total})

        return total
