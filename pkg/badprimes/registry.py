# badprimes/registry.py
from importlib import import_module
from typing import Dict, Optional, TypedDict

from .render import Renderer


class OutputSpec(TypedDict, total=False):
    name: str
    description: str
    renderers: Dict[str, str]  # format -> dotted path, e.g. "badprimes.render.table:render_report"


REGISTRY: Dict[str, OutputSpec] = {
    "report": {
        "name": "Degree Report",
        "description": "Bad primes of one degree with witnesses, coverage, bounds and audit.",
        "renderers": {
            "json": "badprimes.render.json_out:render_report",
            "table": "badprimes.render.table:render_report",
        },
    },
    "certificate": {
        "name": "Tuple Certificate",
        "description": "Rank, minor gcd and verified candidate primes of one M_T.",
        "renderers": {
            "json": "badprimes.render.json_out:render_certificate",
            "table": "badprimes.render.table:render_certificate",
        },
    },
    "bounds": {
        "name": "Upper Bounds",
        "description": "Both explicit bounds on bad primes, factored, with digit counts.",
        "renderers": {
            "json": "badprimes.render.json_out:render_bounds",
            "table": "badprimes.render.table:render_bounds",
        },
    },
    "witnesses": {
        "name": "Counterexample Search",
        "description": "Monic polynomials over F_q sharing a factor with every Hasse derivative.",
        "renderers": {
            "json": "badprimes.render.json_out:render_witnesses",
            "table": "badprimes.render.table:render_witnesses",
        },
    },
}


def get_output(kind: str) -> Optional[OutputSpec]:
    """Look up an output kind"""
    return REGISTRY.get(kind)


def get_renderer(kind: str, fmt: str) -> Renderer:
    """Resolve the renderer for an output kind and format"""
    spec = get_output(kind)
    if spec is None:
        raise KeyError(f"Unknown output kind '{kind}'")
    path = spec["renderers"].get(fmt)
    if path is None:
        raise KeyError(f"Output kind '{kind}' has no '{fmt}' renderer")
    mod_path, fn_name = path.split(":") if ":" in path else (path, "render")
    return getattr(import_module(mod_path), fn_name)
