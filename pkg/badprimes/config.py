#!/usr/bin/env python3
"""
badprimes Configuration
=======================
Single source of truth for run settings.

Values come from the environment (optionally a `.env` file in the working
directory); command-line flags override them through `Config.run_config()`.
"""

import logging
import os
from pathlib import Path
from typing import Optional

import redis
from dotenv import find_dotenv, load_dotenv

from .schemas import RunConfig

logger = logging.getLogger(__name__)


class Config:
    """
    Environment-backed configuration with validation
    """

    LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

    def __init__(self):
        """Initialize configuration from environment"""
        load_dotenv(find_dotenv(usecwd=True), override=False)
        self._errors: list[str] = []

        # ============ PATHS ============
        self.CACHE_DIR = Path(
            os.environ.get('BADPRIMES_CACHE_DIR') or Path.home() / '.cache' / 'badprimes'
        ).expanduser()

        # ============ EXECUTION ============
        self.JOBS = self._int_env('BADPRIMES_JOBS', os.cpu_count() or 1, minimum=1)
        self.SEED = self._int_env('BADPRIMES_SEED', 0, minimum=0)

        # ============ CERTIFICATION BUDGETS ============
        self.EXHAUSTIVE_LIMIT = self._int_env('BADPRIMES_EXHAUSTIVE_LIMIT', 10_000, minimum=1)
        self.TRIAL_BOUND = self._int_env('BADPRIMES_TRIAL_BOUND', 1_000_000, minimum=2)
        self.POLLARD_BUDGET = self._int_env('BADPRIMES_POLLARD_BUDGET', 10_000_000, minimum=1)
        self.MINOR_COUNT = self._int_env('BADPRIMES_MINOR_COUNT', 4, minimum=1)
        self.CROSSCHECK_PRIMES = self._int_env('BADPRIMES_CROSSCHECK_PRIMES', 2, minimum=0)
        self.SEARCH_BUDGET = self._int_env('BADPRIMES_SEARCH_BUDGET', 100_000_000, minimum=1)

        # ============ STATE MANAGEMENT ============
        self.REDIS_URL: Optional[str] = os.environ.get('BADPRIMES_REDIS_URL') or None
        self.USE_REDIS = self.REDIS_URL is not None

        # ============ LOGGING ============
        self.LOG_LEVEL = os.environ.get('BADPRIMES_LOG_LEVEL', 'WARNING').strip().upper()

    def _int_env(self, name: str, default: int, minimum: int) -> int:
        raw = os.environ.get(name)
        if raw is None or not raw.strip():
            return default
        try:
            value = int(raw.replace('_', ''))
        except ValueError:
            self._errors.append(f"{name}={raw!r} is not an integer")
            return default
        if value < minimum:
            self._errors.append(f"{name}={value} must be at least {minimum}")
            return default
        return value

    def validate(self) -> None:
        """
        Validate configuration
        Raises ValueError listing every problem found
        """
        errors = list(self._errors)

        if self.LOG_LEVEL not in self.LOG_LEVELS:
            errors.append(f"BADPRIMES_LOG_LEVEL={self.LOG_LEVEL!r} is not one of {', '.join(self.LOG_LEVELS)}")

        if self.CACHE_DIR.exists() and not self.CACHE_DIR.is_dir():
            errors.append(f"BADPRIMES_CACHE_DIR={self.CACHE_DIR} exists and is not a directory")

        # Redis is optional; an unreachable server only loses the shared tier
        if self.USE_REDIS:
            try:
                redis.from_url(self.REDIS_URL).ping()
                logger.info("Redis connection verified")
            except Exception as e:
                logger.warning(f"Redis unreachable, continuing with the file store: {e}")

        if errors:
            raise ValueError("Configuration validation failed:\n" + "\n".join(errors))

        logger.debug(f"Configuration validated: {self.to_dict()}")

    def run_config(self, **overrides) -> RunConfig:
        """Immutable per-run settings; keyword overrides whose value is None are ignored"""
        values = {
            'jobs': self.JOBS,
            'seed': self.SEED,
            'exhaustive_limit': self.EXHAUSTIVE_LIMIT,
            'trial_bound': self.TRIAL_BOUND,
            'pollard_budget': self.POLLARD_BUDGET,
            'minor_count': self.MINOR_COUNT,
            'crosscheck_primes': self.CROSSCHECK_PRIMES,
            'search_budget': self.SEARCH_BUDGET,
            'cache_dir': self.CACHE_DIR,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**values)

    def to_dict(self) -> dict:
        """Export configuration as dictionary (for debugging)"""
        return {
            'cache_dir': str(self.CACHE_DIR),
            'jobs': self.JOBS,
            'seed': self.SEED,
            'budgets': {
                'exhaustive_limit': self.EXHAUSTIVE_LIMIT,
                'trial_bound': self.TRIAL_BOUND,
                'pollard_budget': self.POLLARD_BUDGET,
                'minor_count': self.MINOR_COUNT,
                'crosscheck_primes': self.CROSSCHECK_PRIMES,
                'search_budget': self.SEARCH_BUDGET,
            },
            'state': {
                'redis': self.USE_REDIS,
            },
            'log_level': self.LOG_LEVEL,
        }


# Singleton instance
_config_instance: Optional[Config] = None


def get_config() -> Config:
    """
    Get or create the configuration singleton

    Returns:
        Config: The configuration instance
    """
    global _config_instance
    if _config_instance is None:
        _config_instance = Config()
        _config_instance.validate()
    return _config_instance


def reset_config() -> None:
    """Drop the singleton so the next get_config() re-reads the environment"""
    global _config_instance
    _config_instance = None
