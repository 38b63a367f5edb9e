from .rules import run_validators

__all__ = ["run_validators"]
