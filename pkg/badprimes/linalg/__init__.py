from .exact import (
    MinorCertificate,
    bareiss_determinant,
    minor_gcd_exhaustive,
    nonzero_maximal_minor,
    rank_mod_p,
    rank_over_rationals,
)
from .factor import FactorResult, factorize
from .sparse import SparseIntMatrix

__all__ = [
    "SparseIntMatrix",
    "MinorCertificate",
    "rank_over_rationals",
    "rank_mod_p",
    "nonzero_maximal_minor",
    "minor_gcd_exhaustive",
    "bareiss_determinant",
    "FactorResult",
    "factorize",
]
