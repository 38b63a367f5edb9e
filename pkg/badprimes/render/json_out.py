# badprimes/render/json_out.py
"""JSON renderers: sorted keys, two-space indent, integers of any size."""

import json
from typing import Any

from ..schemas import BoundReport, DegreeReport, TupleCertificate, WitnessReport

_BIG_FIELDS = {"bound5", "bound6"}


def dumps(document: Any) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def report_document(report: DegreeReport, timings: bool = False, expanded: bool = False) -> dict:
    """Stats only with `timings`, so repeated runs give identical bytes"""
    exclude = None if expanded else {"bounds": _BIG_FIELDS}
    doc = report.model_dump(mode="python", by_alias=True, exclude=exclude)
    if timings:
        doc["stats"] = report.stats.model_dump(mode="python")
    return doc


def render_report(report: DegreeReport, timings: bool = False, expanded: bool = False, **_: Any) -> str:
    return dumps(report_document(report, timings=timings, expanded=expanded))


def render_certificate(cert: TupleCertificate, **_: Any) -> str:
    return dumps(cert.to_document())


def render_bounds(bounds: BoundReport, expanded: bool = False, **_: Any) -> str:
    return dumps(bounds.model_dump(mode="python", exclude=None if expanded else _BIG_FIELDS))


def render_witnesses(report: WitnessReport, **_: Any) -> str:
    return dumps(report.model_dump(mode="python"))
