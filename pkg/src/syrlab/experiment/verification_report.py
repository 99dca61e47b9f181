# File: verification_report.py
# Description: Pass/fail report with counterexample slots.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging

from syrlab.errors import InvariantViolation


_logger = logging.getLogger(__name__)


class VerificationReport:
    """
    Accumulates checks of a named statement and the instances on which it failed.
    """

    def __init__(self, name: str) -> None:
        self.name = name
        self.checks = 0
        self.failures = []
        self.details = dict()

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, is_ok: bool, instance: dict) -> bool:
        """
        Count one check and keep the instance when it failed.

        :param is_ok: bool, outcome of the check
        :param instance: dict, parameters identifying the instance
        :return: bool, is_ok
        """

        self.checks += 1
        if not is_ok:
            _logger.warning('%s failed on %s', self.name, instance)
            self.failures.append(dict(instance))

        return is_ok

    def run(self, check, *args, **instance) -> bool:
        """
        Call check(*args); an InvariantViolation or False result counts as a failure.

        :param check: callable returning a truthy value on success
        :param instance: keyword parameters recorded with a failure
        :return: bool, outcome
        """

        try:
            is_ok = bool(check(*args))
            failure = dict(instance)
        except InvariantViolation as violation:
            is_ok = False
            failure = {**instance, **violation.instance, 'message': str(violation)}

        return self.record(is_ok, failure)

    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        """
        :param other: VerificationReport, folded into this report
        :return: VerificationReport, self
        """

        self.checks += other.checks
        self.failures.extend(other.failures)
        for key, value in other.details.items():
            self.details.setdefault(key, value)

        return self

    def to_dict(self) -> dict:
        report = {
            'name': self.name,
            'checks': self.checks,
            'passed': self.passed,
            'failures': list(self.failures),
            'details': dict(self.details),
        }
        return report
