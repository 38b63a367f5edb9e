# badprimes/errors.py
"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class BadPrimesError(Exception):
    """Base class for every error raised by badprimes"""


class ArgumentError(BadPrimesError, ValueError):
    """An argument is outside the range an operation accepts"""


class MinorLimitExceeded(BadPrimesError, RuntimeError):
    """Exhaustive minor enumeration would exceed the configured limit"""

    def __init__(self, minors: int, limit: int):
        self.minors = minors
        self.limit = limit
        super().__init__(
            f"exhaustive minor gcd needs {minors} determinants (limit {limit}); use the candidate-prime path"
        )


class SearchBudgetExceeded(BadPrimesError, RuntimeError):
    """A counterexample search would enumerate more polynomials than allowed"""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"search needs {required} monic polynomials (budget {budget})")


class BareissDivisionError(BadPrimesError, ArithmeticError):
    """A fraction-free elimination step left a nonzero remainder"""


class CertificateMismatch(BadPrimesError, RuntimeError):
    """Two characterisations of the same prime disagree"""
