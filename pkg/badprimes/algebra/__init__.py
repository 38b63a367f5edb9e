from .macaulay import MacaulayMatrix, build_matrix, canonical_tuples, degree_data, enumerate_monomials
from .polycore import MultiPoly, build_G, build_g_table, elementary_symmetric, phi_apply

__all__ = [
    "MultiPoly",
    "elementary_symmetric",
    "phi_apply",
    "build_G",
    "build_g_table",
    "MacaulayMatrix",
    "build_matrix",
    "canonical_tuples",
    "degree_data",
    "enumerate_monomials",
]
