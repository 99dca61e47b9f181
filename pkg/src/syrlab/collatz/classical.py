# File: classical.py
# Description: Exact verifiers for the classical orbit identities.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import time

import numpy as np

from syrlab.collatz.maps import CollatzMaps
from syrlab.dyadic.residue import Dyadic
from syrlab.errors import InvariantViolation
from syrlab.experiment.verification_report import VerificationReport


_logger = logging.getLogger(__name__)


class ClassicalLemmas:
    """
    Checks of the elementary identities for Col and Syr on concrete integers.

    Single-instance checks return True or raise InvariantViolation; the suite collects them into reports.
    """

    @staticmethod
    def check_lemma_2_1(k: int, a1: int) -> bool:
        """
        Build N = (-1)^k c_k + a1 2^(k+1) and check Syr(N) = 6 a1 + (-1)^k with 2^k || 3N + 1.

        :param k: int, at least 1
        :param a1: int, at least 0 for even k, at least 1 for odd k
        :return: bool, True

        :raises ValueError: if a1 is out of range
        :raises InvariantViolation: if an identity fails
        """

        if k < 1:
            raise ValueError('k must be at least 1')
        minimum_a1 = 1 if k % 2 else 0
        if a1 < minimum_a1:
            raise ValueError(f'a1 must be at least {minimum_a1} for k = {k}')

        sign = -1 if k % 2 else 1
        n = sign * Dyadic.c_k(k) + a1 * (1 << (k + 1))
        syr_n, x = CollatzMaps.syr_step(n)

        if x != k or syr_n != 6 * a1 + sign:
            raise InvariantViolation('Syr(N) = 6 a1 +- 1 failed', {'k': k, 'a1': a1, 'N': n, 'syr': syr_n, 'x': x})
        return True

    @staticmethod
    def lemma_2_1_parameters(n: int) -> tuple:
        """
        Recover (k, a1) for an odd positive N from its first Syracuse step.

        :param n: int, odd, positive
        :return: tuple, (k, a1) with N = (-1)^k c_k + a1 2^(k+1)
        """

        _, k = CollatzMaps.syr_step(n)
        sign = -1 if k % 2 else 1
        a1, remainder = divmod(n - sign * Dyadic.c_k(k), 1 << (k + 1))
        if remainder:
            raise InvariantViolation('N is not of the form (-1)^k c_k + a1 2^(k+1)', {'N': n, 'k': k})

        return k, a1

    @staticmethod
    def check_lemma_2_2(n: int) -> bool:
        """
        Check Syr(4N-1) = 6N-1, Syr(8N+1) = 6N+1 and Syr^2(16N-5) = Syr(24N-7) = 18N-5.

        :param n: int, at least 1
        :return: bool, True
        """

        if n < 1:
            raise ValueError('N must be at least 1')

        syr = CollatzMaps.syr
        values = {
            'syr(4N-1)': (syr(4 * n - 1), 6 * n - 1),
            'syr(8N+1)': (syr(8 * n + 1), 6 * n + 1),
            'syr^2(16N-5)': (CollatzMaps.syr_k(16 * n - 5, 2), 18 * n - 5),
            'syr(24N-7)': (syr(24 * n - 7), 18 * n - 5),
        }
        for name, (actual, expected) in values.items():
            if actual != expected:
                raise InvariantViolation(f'{name} mismatch', {'N': n, 'actual': actual, 'expected': expected})

        return True

    @staticmethod
    def verify_lemma_2_1(k: int, a1: int) -> VerificationReport:
        """
        :param k: int, at least 1
        :param a1: int, in range for k
        :return: VerificationReport, one check
        """

        report = VerificationReport('lemma_2_1')
        report.run(ClassicalLemmas.check_lemma_2_1, k, a1, k=k, a1=a1)
        return report

    @staticmethod
    def verify_lemma_2_2(n: int) -> VerificationReport:
        report = VerificationReport('lemma_2_2')
        report.run(ClassicalLemmas.check_lemma_2_2, n, N=n)
        return report

    @staticmethod
    def image_mod6_check(sample) -> VerificationReport:
        """
        Syr(N) is 1 or 5 modulo 6 for each sampled odd N.

        :param sample: iterable of odd integers
        :return: VerificationReport
        """

        report = VerificationReport('image_mod6')
        for n in sample:
            residue = CollatzMaps.syr(int(n)) % 6
            report.record(residue in (1, 5), {'N': int(n), 'syr_mod6': residue})

        return report

    @staticmethod
    def image_surjectivity_check(bound: int) -> VerificationReport:
        """
        Every target 6N +- 1 up to bound is hit through the preimages 8N + 1 and 4N - 1.

        :param bound: int, largest target
        :return: VerificationReport
        """

        report = VerificationReport('image_surjectivity')
        for target in range(1, bound + 1, 2):
            if target % 6 == 1:
                n = (target - 1) // 6
                preimage = 8 * n + 1
            elif target % 6 == 5:
                n = (target + 1) // 6
                preimage = 4 * n - 1
            else:
                continue
            report.record(CollatzMaps.syr(preimage) == target, {'target': target, 'preimage': preimage})

        return report

    @staticmethod
    def lemma_2_4_index(p: int, j: int) -> int:
        """
        The unique i with x_[1,i-1](p) < j <= x_[1,i](p).

        :param p: int, odd, 0 < p < 2^j
        :param j: int, at least 1
        :return: int, i >= 1
        """

        if j < 1:
            raise ValueError('j must be at least 1')
        if p % 2 == 0 or not 0 < p < (1 << j):
            raise ValueError('p must be odd with 0 < p < 2^j')

        exponent_sum = 0
        i = 0
        value = p
        while exponent_sum < j:
            value, x = CollatzMaps.syr_step(value)
            exponent_sum += x
            i += 1

        return i

    @staticmethod
    def check_lemma_2_4(p: int, j: int, i: int) -> bool:
        """
        Check how the x-sequence of p + 2^j follows that of p.

        Verifies x_l(p + 2^j) = x_l(p) for l < i, the shift identity
        Syr^t(p + 2^j) = Syr^t(p) + 3^t 2^(j - x_[1,t](p)) for t < i, and the dichotomy
        x_[1,i](p + 2^j) = j when x_[1,i](p) > j, x_[1,i](p + 2^j) >= j + 1 when x_[1,i](p) = j.

        :param p: int, odd, 0 < p < 2^j
        :param j: int, at least 1
        :param i: int, with x_[1,i-1](p) < j <= x_[1,i](p)
        :return: bool, True

        :raises ValueError: if the preconditions fail
        :raises InvariantViolation: if a conclusion fails
        """

        if j < 1 or i < 1:
            raise ValueError('i and j must be at least 1')
        if p % 2 == 0 or not 0 < p < (1 << j):
            raise ValueError('p must be odd with 0 < p < 2^j')

        base = CollatzMaps.orbit_record(p, i)
        shifted = CollatzMaps.orbit_record(p + (1 << j), i)
        prefix = np.cumsum((0,) + base.x_seq)
        if not prefix[i - 1] < j <= prefix[i]:
            raise ValueError('i must satisfy x_[1,i-1](p) < j <= x_[1,i](p)')

        instance = {'p': p, 'j': j, 'i': i}
        if shifted.x_seq[:i - 1] != base.x_seq[:i - 1]:
            raise InvariantViolation('x-sequences differ before step i', instance)

        for t in range(i):
            expected = base.syr_iterates[t] + 3 ** t * (1 << (j - int(prefix[t])))
            if shifted.syr_iterates[t] != expected:
                raise InvariantViolation('shift identity failed', {**instance, 't': t})

        shifted_sum = sum(shifted.x_seq)
        base_sum = int(prefix[i])
        if base_sum > j:
            is_ok = shifted_sum == j
        else:
            is_ok = shifted_sum >= j + 1
        if not is_ok:
            raise InvariantViolation('dichotomy failed', {**instance, 'x_p': base_sum, 'x_shifted': shifted_sum})

        return True

    @staticmethod
    def verify_lemma_2_4(p: int, j: int, i: int) -> VerificationReport:
        """
        :param p: int, odd, 0 < p < 2^j
        :param j: int, at least 1
        :param i: int, the index from lemma_2_4_index
        :return: VerificationReport, one check

        :raises ValueError: if the preconditions fail
        """

        report = VerificationReport('lemma_2_4')
        report.run(ClassicalLemmas.check_lemma_2_4, p, j, i, p=p, j=j, i=i)
        return report

    @staticmethod
    def verify_lemma_2_5(m: int = None, n: int = None, p: int = None) -> VerificationReport:
        """
        Orbit coincidences of 2^m - 1 with 2^(m-1) - 1 and 2^m + 2^(m-1) - 1, and of 2^n + 2^(n-3) - 5 with 2^n - 5.

        Pass m for the first two (the first only for even m), n and p for the third.

        :param m: int, at least 2
        :param n: int, at least 6
        :param p: int, with 1 <= p and 3p < n
        :return: VerificationReport
        """

        report = VerificationReport('lemma_2_5')
        syr_k = CollatzMaps.syr_k

        if m is not None:
            if m < 2:
                raise ValueError('m must be at least 2')
            target = syr_k((1 << m) - 1, m)
            closed_form = 3 ** m - 1
            closed_form >>= (closed_form & -closed_form).bit_length() - 1
            report.record(target == closed_form, {'m': m, 'identity': 'closed form', 'value': target})
            if m % 2 == 0:
                other = syr_k((1 << (m - 1)) - 1, m)
                report.record(other == target, {'m': m, 'identity': '2^m-1 ~ 2^(m-1)-1'})
            other = syr_k((1 << m) + (1 << (m - 1)) - 1, m - 1)
            report.record(other == target, {'m': m, 'identity': '2^m-1 ~ 2^m+2^(m-1)-1'})

        if n is not None or p is not None:
            if n is None or p is None:
                raise ValueError('n and p must be given together')
            if n < 6 or p < 1 or 3 * p >= n:
                raise ValueError('need n >= 6 and 1 <= p with 3p < n')
            left = syr_k((1 << n) + (1 << (n - 3)) - 5, 2 * p - 2)
            right = syr_k((1 << n) - 5, 2 * p)
            closed_form = 3 ** (2 * p) * (1 << (n - 3 * p)) - 5
            report.record(left == right == closed_form, {'n': n, 'p': p, 'left': left, 'right': right})

        return report

    @staticmethod
    def verify_classical(nmax: int, seed: int = 0, lemma_2_4_samples: int = 1000,
                         m_max: int = 30, n_max: int = 40) -> dict:
        """
        Run the full classical suite.

        :param nmax: int, odd N up to nmax are checked exhaustively
        :param seed: int, seed for the sampled (p, j) pairs
        :param lemma_2_4_samples: int, number of sampled (p, j) pairs
        :param m_max: int, largest m for the 2^m - 1 coincidences
        :param n_max: int, largest n for the 2^n - 5 coincidences
        :return: dict, report name -> VerificationReport
        """

        if nmax < 1:
            raise ValueError('nmax must be at least 1')

        started = time.perf_counter()
        _logger.info('classical suite: nmax=%d seed=%d', nmax, seed)
        odd_range = range(1, nmax + 1, 2)

        lemma_2_1 = VerificationReport('lemma_2_1')
        for n in odd_range:
            try:
                k, a1 = ClassicalLemmas.lemma_2_1_parameters(n)
            except InvariantViolation as violation:
                lemma_2_1.record(False, violation.instance)
                continue
            lemma_2_1.run(ClassicalLemmas.check_lemma_2_1, k, a1, N=n, k=k, a1=a1)

        lemma_2_2 = VerificationReport('lemma_2_2')
        for n in range(1, max(1, nmax // 16) + 1):
            lemma_2_2.run(ClassicalLemmas.check_lemma_2_2, n, N=n)

        image = ClassicalLemmas.image_mod6_check(odd_range)
        image.merge(ClassicalLemmas.image_surjectivity_check(nmax))
        image.name = 'lemma_2_3'

        lemma_2_4 = VerificationReport('lemma_2_4')
        rng = np.random.default_rng(seed)
        for _ in range(lemma_2_4_samples):
            j = int(rng.integers(1, 31))
            p = 2 * int(rng.integers(0, 1 << (j - 1))) + 1
            i = ClassicalLemmas.lemma_2_4_index(p, j)
            lemma_2_4.run(ClassicalLemmas.check_lemma_2_4, p, j, i, p=p, j=j, i=i)

        lemma_2_5 = VerificationReport('lemma_2_5')
        for m in range(2, m_max + 1):
            lemma_2_5.merge(ClassicalLemmas.verify_lemma_2_5(m=m))
        for n in range(6, n_max + 1):
            for p in range(1, (n - 1) // 3 + 1):
                lemma_2_5.merge(ClassicalLemmas.verify_lemma_2_5(n=n, p=p))

        composition = VerificationReport('composition_law')
        for n in range(1, min(nmax, 2000) + 1, 2):
            record = CollatzMaps.orbit_record(n, 8)
            composition.run(CollatzMaps.verify_composition_law, record, N=n)

        cycles = VerificationReport('negative_cycles')
        expected_words = {-1: (1,), -5: (1, 2), -17: (1, 1, 1, 2, 1, 1, 4)}
        for start, cycle in CollatzMaps.negative_cycles().items():
            cycles.record(cycle['x_word'] == expected_words[start], {'start': start, 'x_word': cycle['x_word']})

        reports = {report.name: report for report in
                   (lemma_2_1, lemma_2_2, image, lemma_2_4, lemma_2_5, composition, cycles)}
        _logger.info('classical suite finished in %.2f s', time.perf_counter() - started)

        return reports
