# badprimes/validate/rules.py
import logging
from typing import List, Optional

from ..algebra.macaulay import build_matrix
from ..errors import SearchBudgetExceeded
from ..linalg.exact import rank_mod_p
from ..oracle.hasse import search_counterexamples
from ..schemas import AuditEntry, DegreeReport, RunConfig

logger = logging.getLogger(__name__)


def _add(report: DegreeReport, kind: str, code: str, message: str, **context) -> None:
    report.audit.validations.append(AuditEntry(
        kind=kind,
        code=code,
        message=message,
        context={k: str(v) for k, v in context.items()}
    ))


def run_validators(report: DegreeReport, config: Optional[RunConfig] = None, oracle: bool = False) -> DegreeReport:
    """
    Re-check a finished degree report

    Args:
        report: Degree report (with its certificates attached)
        config: Run settings; only the search budget and jobs are used
        oracle: Also look for counterexamples over F_p for every bad prime

    Returns:
        Report with audit entries added
    """
    config = config or RunConfig()

    _validate_witnesses(report)
    _validate_aggregation(report)
    _validate_certificates(report)
    _validate_bounds(report)
    if oracle:
        _validate_oracle(report, config)

    errors = sum(1 for v in report.audit.validations if v.kind == "error")
    logger.info(f"Audit for degree {report.degree}: {len(report.audit.validations)} entries, {errors} errors")
    return report


def _validate_witnesses(report: DegreeReport) -> None:
    """Every witness must drop rank mod p on a freshly built matrix"""
    C = report.degree_data.C
    for w in report.witnesses:
        rank = rank_mod_p(build_matrix(report.degree, w.tuple_), w.prime)
        if rank < C:
            _add(report, "info", "witness_reverified",
                 f"p={w.prime} re-verified on T={tuple(w.tuple_)}: rank {rank} < {C}",
                 prime=w.prime, tuple=w.tuple_)
        else:
            _add(report, "error", "witness_failed",
                 f"p={w.prime} on T={tuple(w.tuple_)} keeps full rank {rank}",
                 prime=w.prime, tuple=w.tuple_)


def _validate_aggregation(report: DegreeReport) -> None:
    if not report.certificates:
        return
    union = sorted({p for cert in report.certificates for p in cert.bad_primes})
    if union != report.bad_primes:
        _add(report, "error", "aggregation_mismatch",
             f"reported {report.bad_primes}, certificates give {union}")


def _validate_certificates(report: DegreeReport) -> None:
    for t in report.degenerate_tuples:
        _add(report, "error", "degenerate_tuple",
             f"T={tuple(t)} has rank over Q below C={report.degree_data.C}", tuple=t)
    for t in report.incomplete_tuples:
        _add(report, "warning", "incomplete_certificate",
             f"T={tuple(t)} left an unfactored cofactor; its bad primes may be incomplete", tuple=t)


def _validate_bounds(report: DegreeReport) -> None:
    # a degenerate tuple voids the bound, which assumes full rank in characteristic 0
    if report.bounds is None or report.degenerate_tuples:
        return
    for p in report.bad_primes:
        if p >= report.bounds.bound6:
            _add(report, "error", "bound_violation",
                 f"bad prime {p} is not below {report.bounds.bound6_factored}", prime=p)


def _validate_oracle(report: DegreeReport, config: RunConfig) -> None:
    """One-directional: a silent search is not evidence that p is good"""
    for p in report.bad_primes:
        try:
            found = search_counterexamples(report.degree, p, 1, budget=config.search_budget, jobs=config.jobs)
        except SearchBudgetExceeded as e:
            _add(report, "warning", "oracle_silent", f"p={p}: search skipped ({e})", prime=p)
            continue
        if found.witnesses:
            _add(report, "info", "oracle_confirmed",
                 f"p={p}: {len(found.witnesses)} counterexamples over F_{p}, e.g. {found.witnesses[0]}",
                 prime=p, count=len(found.witnesses))
        else:
            _add(report, "warning", "oracle_silent",
                 f"p={p}: no counterexample with coefficients in F_{p}", prime=p)


__all__: List[str] = ["run_validators"]
