#!/usr/bin/env python3
"""
badprimes Certificate Store
===========================
Content-addressed persistence of per-tuple certificates

Three tiers, consulted in order:
- in-process dictionary
- JSON files under <cache_dir>/n<degree>/
- Redis (optional, shared between machines)

A certificate is keyed by degree, tuple, the SHA-256 of its matrix text and
the fingerprint of the settings that produced it, so a change in either the
matrix or the budgets never reuses a stale result.
"""

import json
import logging
import os
import shutil
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import redis
from pydantic import ValidationError

from .schemas import DegreeReport, TupleCertificate

logger = logging.getLogger(__name__)

REDIS_PREFIX = "badprimes:cert:"


@dataclass
class StoreStats:
    hits: int = 0
    misses: int = 0
    writes: int = 0


def cert_key(degree: int, tuple_: Sequence[int], matrix_hash: str, fingerprint: str) -> str:
    """Relative key `n<degree>/<t1-t2-...>_<hash16>_<fp8>`"""
    tag = "-".join(str(t) for t in tuple_)
    return f"n{degree}/{tag}_{matrix_hash[:16]}_{fingerprint[:8]}"


def _dumps(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2)


class CertificateStore:
    """
    Certificate store with a local cache, a file tree and an optional Redis mirror
    """

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        redis_client: Optional[redis.Redis] = None,
        enabled: bool = True,
    ):
        """
        Args:
            cache_dir: Root of the file tier; None keeps certificates in memory only
            redis_client: Optional Redis client for the shared tier
            enabled: When False every lookup misses and nothing is written
        """
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.redis = redis_client
        self.enabled = enabled
        self.local_cache: Dict[str, TupleCertificate] = {}
        self.stats = StoreStats()

        logger.info(
            f"CertificateStore initialized - "
            f"files: {self.cache_dir if self.cache_dir else 'off'}, "
            f"Redis: {bool(self.redis)}, "
            f"enabled: {self.enabled}"
        )

    @classmethod
    def from_url(cls, cache_dir: Optional[Path], redis_url: Optional[str], enabled: bool = True) -> "CertificateStore":
        client = None
        if redis_url and enabled:
            try:
                client = redis.from_url(redis_url)
                client.ping()
            except Exception as e:
                logger.warning(f"Redis unavailable at {redis_url}, using the file store only: {e}")
                client = None
        return cls(cache_dir=cache_dir, redis_client=client, enabled=enabled)

    def _path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.json"

    def get(self, key: str) -> Optional[TupleCertificate]:
        if not self.enabled:
            return None

        if key in self.local_cache:
            self.stats.hits += 1
            return self.local_cache[key]

        cert = self._load_file(key) or self._load_redis(key)
        if cert is None:
            self.stats.misses += 1
            return None
        self.local_cache[key] = cert
        self.stats.hits += 1
        logger.debug(f"Cache hit for {key}")
        return cert

    def _load_file(self, key: str) -> Optional[TupleCertificate]:
        if self.cache_dir is None:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return TupleCertificate.model_validate(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable cache entry {path}: {e}")
            return None

    def _load_redis(self, key: str) -> Optional[TupleCertificate]:
        if not self.redis:
            return None
        try:
            data = self.redis.get(REDIS_PREFIX + key)
        except Exception as e:
            logger.warning(f"Redis read failed for {key}: {e}")
            return None
        if not data:
            return None
        try:
            cert = TupleCertificate.model_validate(json.loads(data))
        except (json.JSONDecodeError, ValidationError) as e:
            logger.warning(f"Ignoring malformed Redis entry {key}: {e}")
            return None
        # backfill the file tier
        self._write_file(key, cert)
        return cert

    def put(self, key: str, cert: TupleCertificate) -> None:
        if not self.enabled:
            return
        self.local_cache[key] = cert
        self._write_file(key, cert)
        if self.redis:
            try:
                self.redis.set(REDIS_PREFIX + key, _dumps(cert.to_document()))
            except Exception as e:
                logger.warning(f"Redis write failed for {key}: {e}")
        self.stats.writes += 1

    def _write_file(self, key: str, cert: TupleCertificate) -> None:
        if self.cache_dir is None:
            return
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(_dumps(cert.to_document()), encoding="utf-8")
        os.replace(tmp, path)

    def list_entries(self, degree: Optional[int] = None) -> List[str]:
        """Keys of stored certificates, sorted, optionally restricted to one degree"""
        keys = set(self.local_cache)
        if self.cache_dir is not None and self.cache_dir.exists():
            pattern = f"n{degree}/*.json" if degree is not None else "n*/*.json"
            for path in self.cache_dir.glob(pattern):
                keys.add(path.relative_to(self.cache_dir).with_suffix("").as_posix())
        if self.redis:
            try:
                match = f"{REDIS_PREFIX}n{degree}/*" if degree is not None else f"{REDIS_PREFIX}*"
                for raw in self.redis.scan_iter(match=match):
                    name = raw.decode() if isinstance(raw, bytes) else raw
                    keys.add(name[len(REDIS_PREFIX):])
            except Exception as e:
                logger.warning(f"Redis scan failed: {e}")
        if degree is not None:
            keys = {k for k in keys if k.startswith(f"n{degree}/")}
        return sorted(keys)

    def clear(self, degree: Optional[int] = None) -> int:
        """Remove certificates (all, or one degree); returns how many keys were removed"""
        keys = self.list_entries(degree)
        for key in keys:
            self.local_cache.pop(key, None)
        if self.cache_dir is not None and self.cache_dir.exists():
            dirs = [self.cache_dir / f"n{degree}"] if degree is not None else list(self.cache_dir.glob("n*"))
            for d in dirs:
                if d.is_dir():
                    shutil.rmtree(d)
        if self.redis and keys:
            try:
                self.redis.delete(*[REDIS_PREFIX + k for k in keys])
            except Exception as e:
                logger.warning(f"Redis delete failed: {e}")
        logger.info(f"Cleared {len(keys)} cached certificates")
        return len(keys)

    def save_report(self, report: DegreeReport, text: str) -> Optional[Path]:
        """Write the rendered degree report to <cache_dir>/reports/degree_<n>.json"""
        if self.cache_dir is None or not self.enabled:
            return None
        path = self.cache_dir / "reports" / f"degree_{report.degree}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Saved degree {report.degree} report to {path}")
        return path
