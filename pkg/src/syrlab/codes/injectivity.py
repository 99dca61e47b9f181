# File: injectivity.py
# Description: Bounded-fiber property of N -> Syr^k(N) on codes with capped prefix sums.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import math
from collections import defaultdict
from fractions import Fraction
from itertools import combinations

from syrlab.codes.syracuse_code import CodeMap, SyracuseCode
from syrlab.experiment.verification_report import VerificationReport


_logger = logging.getLogger(__name__)

_MU_LIMIT = math.log(3) / math.log(2)


class Injectivity:
    """
    Separation constant M(mu) and the exhaustive collision experiment.
    """

    @staticmethod
    def separation_M(mu) -> float:
        """
        M(mu) = 3^(-1) (1 - 2^mu 3^(-1))^(-1).

        :param mu: float or Fraction, with 1 <= mu < log 3 / log 2
        :return: float

        :raises ValueError: if mu is out of range
        """

        mu_value = float(mu)
        if not 1 <= mu_value < _MU_LIMIT:
            raise ValueError('mu must lie in [1, log 3 / log 2)')

        return 1.0 / (3.0 * (1.0 - 2.0 ** mu_value / 3.0))

    @staticmethod
    def collision_experiment(mu, k: int, n: int, pair_limit: int = 2000) -> VerificationReport:
        """
        Enumerate codes with x_[1,k] = n and x_[1,i] <= mu i, group N(x, 1) by Syr^k, and check that every
        fiber has at most floor(M(mu)) elements and that
        |Syr^k(N) - Syr^k(N')| > 3^k 2^(-n) (|N - N'| - M(mu)) on all pairs.

        :param mu: Fraction or str, rational cap
        :param k: int, number of entries
        :param n: int, total
        :param pair_limit: int, pairwise inequality is checked only when the set has at most this many codes
        :return: VerificationReport, details hold codes, max_fiber, fiber_bound
        """

        mu = Fraction(mu)
        separation = Injectivity.separation_M(mu)
        fiber_bound = math.floor(separation)

        fibers = defaultdict(list)
        images = []
        for xs in CodeMap.compositions(n, k, mu):
            code = SyracuseCode(xs)
            start = CodeMap.code_to_integer_ext(code)
            image = CodeMap.syr_k_closed_form(code)
            fibers[image].append(start)
            images.append((start, image))

        report = VerificationReport('lemma_3_5')
        max_fiber = max((len(fiber) for fiber in fibers.values()), default=0)
        for image, fiber in fibers.items():
            report.record(len(fiber) <= fiber_bound, {'image': image, 'fiber': sorted(fiber)})

        scale = Fraction(3 ** k, 1 << n)
        is_pairwise_checked = len(images) <= pair_limit
        if is_pairwise_checked:
            for (start, image), (other_start, other_image) in combinations(images, 2):
                left = abs(image - other_image)
                right = float(scale) * (abs(start - other_start) - separation)
                report.record(left > right, {'N': start, 'N_prime': other_start})

        report.details = {
            'mu': str(mu), 'k': k, 'n': n, 'codes': len(images), 'max_fiber': max_fiber,
            'fiber_bound': fiber_bound, 'separation': separation, 'pairwise_checked': is_pairwise_checked,
        }
        _logger.info('collision experiment mu=%s k=%d n=%d: %d codes, max fiber %d', mu, k, n, len(images), max_fiber)

        return report
