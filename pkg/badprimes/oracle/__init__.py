from .fields import FiniteField, FpUniPoly, get_field
from .hasse import counterexample_family, hasse_derivative, is_casas_alvero, search_counterexamples

__all__ = [
    "FiniteField",
    "FpUniPoly",
    "get_field",
    "hasse_derivative",
    "is_casas_alvero",
    "search_counterexamples",
    "counterexample_family",
]
