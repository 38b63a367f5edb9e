# badprimes/render/table.py
"""
Plain-text tables
=================
Human-readable views built as pandas DataFrames and printed with
`DataFrame.to_string`. Integers longer than a terminal line are shown by
digit count.
"""

from typing import Any, List

import pandas as pd

from ..bounds import decimal_digits
from ..schemas import BoundReport, DegreeReport, TupleCertificate, WitnessReport

_MAX_INLINE_DIGITS = 40


def _short(x: int) -> str:
    digits = decimal_digits(x)
    return str(x) if digits <= _MAX_INLINE_DIGITS else f"<{digits} digits>"


def _frame(rows: List[List[Any]], columns: List[str]) -> str:
    if not rows:
        return "(none)"
    return pd.DataFrame(rows, columns=columns).to_string(index=False)


def _tuple(t: List[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def render_bounds(bounds: BoundReport, expanded: bool = False, **_: Any) -> str:
    rows = [
        ["bound5", bounds.bound5_factored, bounds.bound5_digits],
        ["bound6", bounds.bound6_factored, bounds.bound6_digits],
    ]
    out = [
        f"n={bounds.n}  C={bounds.C}  D={bounds.D}  threshold i={bounds.threshold_index}",
        _frame(rows, ["bound", "factored", "digits"]),
        "",
        _frame([[r.i, r.value, r.multiplicity] for r in bounds.b_runs], ["i", "b value", "multiplicity"]),
    ]
    if expanded:
        out += ["", f"bound5 = {bounds.bound5}", f"bound6 = {bounds.bound6}"]
    return "\n".join(out) + "\n"


def render_report(report: DegreeReport, timings: bool = False, expanded: bool = False, **_: Any) -> str:
    data = report.degree_data
    state = "complete" if report.complete else ("interrupted" if report.interrupted else "incomplete")
    out = [
        f"Degree {report.degree}: d={data.d} C={data.C} D={data.D}",
        f"Tuples: {report.tuples_processed}/{report.tuples_total} "
        f"(covering {report.tuples_covered}, symmetry {'on' if report.symmetry else 'off'}) - {state}",
        f"Bad primes: {report.bad_primes if report.bad_primes else 'none'}",
        "",
        _frame([[w.prime, _tuple(w.tuple_), w.rank_mod_p] for w in report.witnesses], ["prime", "witness", "rank mod p"]),
    ]
    if report.degenerate_tuples:
        out += ["", "DEGENERATE tuples (rank over Q < C): " + ", ".join(_tuple(t) for t in report.degenerate_tuples)]
    if report.incomplete_tuples:
        out += ["", "Incomplete tuples: " + ", ".join(_tuple(t) for t in report.incomplete_tuples)]
    if report.bounds is not None:
        out += ["", render_bounds(report.bounds, expanded=expanded).rstrip("\n")]
    if report.audit.validations:
        rows = [[v.kind, v.code, v.message] for v in report.audit.validations]
        out += ["", _frame(rows, ["kind", "code", "message"])]
    if timings:
        s = report.stats
        out += [
            "",
            f"wall {s.wall_seconds:.2f}s  jobs {s.jobs}  cache hits {s.cache_hits}  "
            f"misses {s.cache_misses}  writes {s.cache_writes}",
        ]
    return "\n".join(out) + "\n"


def render_certificate(cert: TupleCertificate, **_: Any) -> str:
    out = [
        f"n={cert.degree}  T={_tuple(cert.tuple_)}  orbit={cert.orbit_size}  "
        f"d={cert.d} C={cert.C} D={cert.D}",
        f"rank over Q: {cert.rank_q}  minor gcd: {_short(cert.minor_gcd)}  status: {cert.status}",
        f"unresolved cofactor: {_short(cert.unresolved_cofactor)}",
        f"matrix sha256: {cert.matrix_hash}",
        "",
        _frame([[c.prime, c.rank_mod_p, c.verdict] for c in cert.candidates], ["prime", "rank mod p", "verdict"]),
    ]
    return "\n".join(out) + "\n"


def render_witnesses(report: WitnessReport, **_: Any) -> str:
    modulus = " ".join(map(str, report.modulus))
    out = [
        f"n={report.n}  q={report.q} (p={report.p}, k={report.k}, modulus {modulus})  searched {report.searched}",
        _frame([[" ".join(map(str, w))] for w in report.witnesses], ["coefficients (highest first)"]),
    ]
    return "\n".join(out) + "\n"
