"""
badprimes
=========
Exact bad primes of the Casas-Alvero conjecture for a given degree

This package provides:
- Sparse integer polynomials and the Macaulay coefficient matrices M_T
- Fraction-free exact linear algebra, ranks mod p and partial factoring
- Per-tuple certificates and degree-level aggregation with caching
- Explicit upper bounds on bad primes
- A brute-force Hasse-derivative oracle over finite fields
- A command-line front end
"""

__version__ = "1.0.0"
__author__ = "badprimes developers"

from .algebra.macaulay import build_matrix, degree_data
from .bounds import improved_bound, upper_bound
from .certify.certifier import bad_primes, certify_tuple
from .schemas import BoundReport, DegreeReport, RunConfig, TupleCertificate

__all__ = [
    "bad_primes",
    "certify_tuple",
    "build_matrix",
    "degree_data",
    "upper_bound",
    "improved_bound",
    "BoundReport",
    "DegreeReport",
    "RunConfig",
    "TupleCertificate",
]
