"""Certificate store tiers"""

import json

import pytest

from badprimes.certify.certifier import certify_tuple
from badprimes.schemas import DegreeData, DegreeReport
from badprimes.state import REDIS_PREFIX, CertificateStore, cert_key

KEY = cert_key(3, (1, 3), "ab" * 32, "cd" * 32)


@pytest.fixture
def cert(run_config):
    return certify_tuple(3, (1, 3), run_config)


class TestCertKey:
    """Content-addressed keys"""

    def test_format(self):
        assert KEY == "n3/1-3_abababababababab_cdcdcdcd"

    def test_changes_with_fingerprint(self):
        assert cert_key(3, (1, 3), "ab" * 32, "ef" * 32) != KEY


class TestFileTier:
    """JSON files under the cache directory"""

    def test_round_trip(self, store, cert, tmp_path):
        assert store.get(KEY) is None
        store.put(KEY, cert)
        path = tmp_path / "cache" / f"{KEY}.json"
        assert path.exists()
        assert json.loads(path.read_text())["tuple"] == [1, 3]

        fresh = CertificateStore(cache_dir=tmp_path / "cache")
        assert fresh.get(KEY) == cert
        assert fresh.stats.hits == 1

    def test_no_temp_files_left(self, store, cert, tmp_path):
        store.put(KEY, cert)
        assert not list((tmp_path / "cache").rglob("*.tmp"))

    def test_corrupt_entry_is_a_miss(self, store, cert, tmp_path):
        store.put(KEY, cert)
        (tmp_path / "cache" / f"{KEY}.json").write_text("{not json")
        fresh = CertificateStore(cache_dir=tmp_path / "cache")
        assert fresh.get(KEY) is None
        assert fresh.stats.misses == 1

    def test_disabled(self, tmp_path, cert):
        off = CertificateStore(cache_dir=tmp_path / "cache", enabled=False)
        off.put(KEY, cert)
        assert off.get(KEY) is None
        assert not (tmp_path / "cache").exists()

    def test_list_and_clear(self, store, cert):
        other = cert_key(4, (1, 2, 3), "00" * 32, "11" * 32)
        store.put(KEY, cert)
        store.put(other, cert)
        assert store.list_entries() == sorted([KEY, other])
        assert store.list_entries(3) == [KEY]
        assert store.clear(3) == 1
        assert store.list_entries() == [other]
        assert store.get(KEY) is None

    def test_save_report(self, store):
        report = DegreeReport(degree=3, degree_data=DegreeData(n=3, d=2, C=3, D=3), symmetry=True)
        path = store.save_report(report, "{}\n")
        assert path.name == "degree_3.json"
        assert path.read_text() == "{}\n"


class TestRedisTier:
    """Optional shared tier"""

    def test_write_through_and_backfill(self, fake_redis, cert, tmp_path):
        writer = CertificateStore(cache_dir=tmp_path / "a", redis_client=fake_redis)
        writer.put(KEY, cert)
        assert fake_redis.get(REDIS_PREFIX + KEY) is not None

        reader = CertificateStore(cache_dir=tmp_path / "b", redis_client=fake_redis)
        assert reader.get(KEY) == cert
        assert (tmp_path / "b" / f"{KEY}.json").exists()

    def test_listed_and_cleared(self, fake_redis, cert):
        store = CertificateStore(redis_client=fake_redis)
        store.put(KEY, cert)
        assert store.list_entries(3) == [KEY]
        assert store.clear() == 1
        assert fake_redis.get(REDIS_PREFIX + KEY) is None

    def test_failures_degrade_to_files(self, mock_redis, cert, tmp_path):
        store = CertificateStore(cache_dir=tmp_path / "cache", redis_client=mock_redis)
        store.put(KEY, cert)
        assert store.stats.writes == 1
        fresh = CertificateStore(cache_dir=tmp_path / "other", redis_client=mock_redis)
        assert fresh.get(KEY) is None
        assert store.list_entries() == [KEY]

    def test_unreachable_url(self, tmp_path):
        store = CertificateStore.from_url(tmp_path, "redis://127.0.0.1:1/0")
        assert store.redis is None
