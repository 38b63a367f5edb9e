from .certifier import bad_primes, certify_tuple

__all__ = ["bad_primes", "certify_tuple"]
