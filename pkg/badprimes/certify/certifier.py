# badprimes/certify/certifier.py
"""
Per-tuple certificates and degree-level aggregation
===================================================
A prime p is bad for n exactly when M_T drops rank mod p for some tuple T,
i.e. when p divides the gcd J_T of the maximal minors of some M_T.

certify_tuple: rank over Q, then either the exact J_T (few minors) or the
gcd of a handful of nonzero minors (a multiple of J_T), factored and every
prime confirmed by a rank computation mod p.

bad_primes: all tuples of a degree (one per relabeling orbit by default),
cached, run on a worker pool and merged in scheduling order.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Sequence

from sympy import nextprime

from ..algebra.macaulay import (
    MacaulayMatrix,
    TupleT,
    build_matrix,
    canonical_tuples,
    degree_data,
    orbit_size,
    validate_tuple,
    verbatim_tuples,
)
from ..algebra.polycore import build_g_table, coefficient_maxima
from ..bounds import improved_bound
from ..errors import BadPrimesError, CertificateMismatch, MinorLimitExceeded
from ..linalg.exact import candidate_gcd, maximal_minors, minor_gcd_exhaustive, nonzero_maximal_minor, rank_mod_p
from ..linalg.factor import factorize
from ..pool import iter_tasks
from ..schemas import CandidatePrime, DegreeReport, RunConfig, RunStats, TupleCertificate, Witness
from ..state import CertificateStore, cert_key

logger = logging.getLogger(__name__)

_CROSSCHECK_BITS = 61


def _crosscheck_primes(count: int, seed: str) -> list[int]:
    rng = random.Random(f"crosscheck:{seed}")
    return [int(nextprime(rng.getrandbits(_CROSSCHECK_BITS) | (1 << _CROSSCHECK_BITS))) for _ in range(count)]


def certify_tuple(
    n: int,
    T: Sequence[int],
    config: RunConfig | None = None,
    orbit: int | None = None,
    matrix: MacaulayMatrix | None = None,
) -> TupleCertificate:
    config = config or RunConfig()
    T = validate_tuple(n, T)
    M = matrix if matrix is not None else build_matrix(n, T, build_g_table(n))
    data = M.data
    C = data.C
    seed = f"{config.seed}:{','.join(map(str, T))}"
    base = dict(
        degree=n,
        tuple=list(T),
        orbit_size=orbit if orbit is not None else orbit_size(n, T),
        d=data.d,
        C=C,
        D=data.D,
        matrix_hash=M.content_hash(),
    )

    rank_q = nonzero_maximal_minor(M).rank

    for p in _crosscheck_primes(config.crosscheck_primes, seed):
        r = rank_mod_p(M, p)
        if r > rank_q:
            raise BadPrimesError(f"T={T}: rank {r} mod {p} exceeds rank {rank_q} over Q")
        if r < rank_q:
            logger.debug(f"T={T}: rank drops to {r} mod cross-check prime {p} (rank {rank_q} over Q)")

    if rank_q < C:
        logger.error(f"Degenerate tuple T={T} for n={n}: rank over Q is {rank_q} < C={C}")
        return TupleCertificate(**base, rank_q=rank_q, minor_gcd=0, status="degenerate")

    exhaustive = True
    try:
        g = minor_gcd_exhaustive(M, config.exhaustive_limit)
    except MinorLimitExceeded as e:
        exhaustive = False
        minors = maximal_minors(M, config.minor_count, seed=seed)
        logger.debug(f"T={T}: {e}; using the gcd of {len(minors)} sampled minors")
        g = candidate_gcd(minors)

    fr = factorize(g, config.trial_bound, config.pollard_budget, seed=seed)
    candidates = []
    for p in fr.primes:
        r = rank_mod_p(M, p)
        verdict = "bad" if r < C else "good"
        if exhaustive and verdict == "good":
            raise CertificateMismatch(f"T={T}: {p} divides J_T but M_T keeps full rank mod {p}")
        candidates.append(CandidatePrime(prime=p, rank_mod_p=r, verdict=verdict))

    status = "incomplete" if fr.cofactor > 1 else "complete"
    if status == "incomplete":
        logger.warning(f"Incomplete certificate for T={T}: cofactor of {fr.cofactor.bit_length()} bits left unfactored")
    cert = TupleCertificate(
        **base,
        rank_q=rank_q,
        minor_gcd=g,
        candidates=candidates,
        bad_primes=sorted(c.prime for c in candidates if c.verdict == "bad"),
        unresolved_cofactor=fr.cofactor,
        status=status,
    )
    logger.info(f"n={n} T={T}: {status}, bad primes {cert.bad_primes}")
    return cert


def _certify_task(args: tuple[int, TupleT, int, RunConfig]) -> TupleCertificate:
    n, T, orbit, config = args
    return certify_tuple(n, T, config, orbit=orbit)


def _aggregate(report: DegreeReport, certificates: list[TupleCertificate]) -> None:
    witnesses: dict[int, Witness] = {}
    for cert in certificates:
        for cand in cert.candidates:
            if cand.verdict == "bad" and cand.prime not in witnesses:
                witnesses[cand.prime] = Witness(prime=cand.prime, tuple=cert.tuple_, rank_mod_p=cand.rank_mod_p)
    report.bad_primes = sorted(witnesses)
    report.witnesses = [witnesses[p] for p in report.bad_primes]
    report.degenerate_tuples = [cert.tuple_ for cert in certificates if cert.status == "degenerate"]
    report.incomplete_tuples = [cert.tuple_ for cert in certificates if cert.status == "incomplete"]
    report.tuples_processed = len(certificates)
    report.tuples_covered = sum(cert.orbit_size for cert in certificates)
    report.certificates = certificates


def bad_primes(n: int, config: RunConfig | None = None, store: CertificateStore | None = None) -> DegreeReport:
    config = config or RunConfig(degree=n)
    store = store or CertificateStore(enabled=False)
    started = time.perf_counter()
    fingerprint = config.fingerprint()
    table = build_g_table(n)
    schedule = canonical_tuples(n) if config.symmetry else verbatim_tuples(n)
    logger.info(f"Degree {n}: {len(schedule)} tuples to certify (symmetry={'on' if config.symmetry else 'off'})")

    results: dict[TupleT, TupleCertificate] = {}
    pending = []
    keys: dict[TupleT, str] = {}
    for T, size in schedule:
        M = build_matrix(n, T, table)
        key = cert_key(n, T, M.content_hash(), fingerprint)
        keys[T] = key
        cached = store.get(key)
        if cached is not None:
            results[T] = cached.model_copy(update={"orbit_size": size})
            logger.info(f"Cache hit for T={T}")
        else:
            pending.append((n, T, size, config))

    interrupted = False
    try:
        for cert in iter_tasks(_certify_task, pending, jobs=config.jobs, desc=f"degree {n}"):
            T = tuple(cert.tuple_)
            results[T] = cert
            store.put(keys[T], cert)
    except KeyboardInterrupt:
        interrupted = True
        logger.warning(f"Interrupted after {len(results)} of {len(schedule)} tuples; partial report follows")

    ordered = [results[T] for T, _ in schedule if T in results]
    report = DegreeReport(
        degree=n,
        degree_data=degree_data(n),
        symmetry=config.symmetry,
        tuples_total=len(schedule),
        interrupted=interrupted,
        bounds=improved_bound(n),
        coefficient_maxima=[list(row) for row in coefficient_maxima(n)],
    )
    _aggregate(report, ordered)
    report.complete = (
        not interrupted
        and report.tuples_processed == report.tuples_total
        and all(cert.status == "complete" for cert in ordered)
    )
    report.stats = RunStats(
        wall_seconds=time.perf_counter() - started,
        cache_hits=store.stats.hits,
        cache_misses=store.stats.misses,
        cache_writes=store.stats.writes,
        jobs=config.jobs,
    )
    logger.info(
        f"Degree {n}: bad primes {report.bad_primes}, "
        f"{report.tuples_processed}/{report.tuples_total} tuples, complete={report.complete}"
    )
    return report
