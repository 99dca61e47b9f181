# File: errors.py
# Description: Exception types raised by syrlab.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.


class PrecisionError(ValueError):
    """
    Raised when a truncated 2-adic value is narrower than the requested residue width.
    """


class EnumerationLimitError(RuntimeError):
    """
    Raised when an exact enumeration would exceed the configured state cap.
    """


class InvariantViolation(ArithmeticError):
    """
    Raised when a proved identity or bound fails on a concrete instance.

    Carries the offending instance so batch verifiers can record it as a counterexample.
    """

    def __init__(self, message: str, instance: dict = None) -> None:
        super().__init__(message)
        self.instance = dict(instance) if instance else {}


class ConfigError(ValueError):
    """
    Raised for malformed experiment configuration files or values.
    """

    def __init__(self, message: str, path: str = None, line_number: int = None, key: str = None) -> None:
        location = ''
        if path is not None:
            location = f'{path}:'
        if line_number is not None:
            location = f'{location}{line_number}:'
        if location:
            message = f'{location} {message}'
        super().__init__(message)
        self.path = path
        self.line_number = line_number
        self.key = key
