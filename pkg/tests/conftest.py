"""Shared fixtures for the badprimes test suite"""

from unittest.mock import Mock

import fakeredis
import pytest
import redis

from badprimes.algebra.macaulay import build_matrix
from badprimes.algebra.polycore import build_g_table
from badprimes.config import reset_config
from badprimes.schemas import RunConfig
from badprimes.state import CertificateStore


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    """Every test gets its own cache directory and a fresh config singleton"""
    for name in (
        "BADPRIMES_JOBS",
        "BADPRIMES_SEED",
        "BADPRIMES_EXHAUSTIVE_LIMIT",
        "BADPRIMES_TRIAL_BOUND",
        "BADPRIMES_POLLARD_BUDGET",
        "BADPRIMES_MINOR_COUNT",
        "BADPRIMES_CROSSCHECK_PRIMES",
        "BADPRIMES_SEARCH_BUDGET",
        "BADPRIMES_REDIS_URL",
        "BADPRIMES_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("BADPRIMES_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("BADPRIMES_JOBS", "1")
    monkeypatch.chdir(tmp_path)
    reset_config()
    yield
    reset_config()


@pytest.fixture
def run_config(tmp_path):
    """Default budgets, single worker, cache under tmp"""
    return RunConfig(jobs=1, cache_dir=tmp_path / "cache")


@pytest.fixture
def store(tmp_path):
    """File-backed certificate store"""
    return CertificateStore(cache_dir=tmp_path / "cache")


@pytest.fixture
def fake_redis():
    """In-process Redis server"""
    return fakeredis.FakeRedis()


@pytest.fixture
def mock_redis():
    """Redis client whose every call fails"""
    mock = Mock(spec=redis.Redis)
    mock.ping.return_value = True
    mock.get.side_effect = redis.ConnectionError("connection refused")
    mock.set.side_effect = redis.ConnectionError("connection refused")
    mock.scan_iter.side_effect = redis.ConnectionError("connection refused")
    return mock


@pytest.fixture
def g3():
    """G table for degree 3"""
    return build_g_table(3)


@pytest.fixture
def m13(g3):
    """M_T for n=3, T=(1,3): [[-2,1,0],[0,-2,1],[0,1,0]]"""
    return build_matrix(3, (1, 3), g3)


@pytest.fixture
def m33(g3):
    """M_T for n=3, T=(3,3): [[1,1,0],[0,1,1],[0,1,0]]"""
    return build_matrix(3, (3, 3), g3)
