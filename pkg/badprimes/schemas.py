# badprimes/schemas.py
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


# --- Degree combinatorics ---------------------------------------------------
class DegreeData(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    d: int                       # Macaulay degree (n^2-3n+4)/2
    C: int                       # columns: monomials of degree d in n-1 variables
    D: int                       # rows: sum_i binom(d-i+n-2, n-2)

    @model_validator(mode="after")
    def _rows_cover_columns(self) -> DegreeData:
        # n = 2 and n = 3 give square matrices; from n = 4 on there are strictly more rows
        if self.D < self.C or (self.n >= 4 and self.D == self.C):
            raise ValueError(f"degree {self.n}: D={self.D} must exceed C={self.C}")
        return self


# --- Run configuration ------------------------------------------------------
class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    degree: int | None = Field(default=None, ge=2)
    jobs: int = Field(default=1, ge=1)
    symmetry: bool = True
    exhaustive_limit: int = Field(default=10_000, gt=0)
    trial_bound: int = Field(default=1_000_000, ge=2)
    pollard_budget: int = Field(default=10_000_000, gt=0)
    minor_count: int = Field(default=4, ge=1)
    crosscheck_primes: int = Field(default=2, ge=0)
    seed: int = Field(default=0, ge=0)
    search_budget: int = Field(default=100_000_000, gt=0)
    cache_dir: Path | None = None
    use_cache: bool = True
    output_format: Literal["json", "table"] = "json"
    timings: bool = False

    def fingerprint(self) -> str:
        """Hash of the settings that can change a certificate's content"""
        keyed = {
            "exhaustive_limit": self.exhaustive_limit,
            "trial_bound": self.trial_bound,
            "pollard_budget": self.pollard_budget,
            "minor_count": self.minor_count,
            "seed": self.seed,
        }
        return hashlib.sha256(json.dumps(keyed, sort_keys=True).encode("utf-8")).hexdigest()


# --- Certificates -----------------------------------------------------------
class CandidatePrime(BaseModel):
    prime: int
    rank_mod_p: int
    verdict: Literal["bad", "good"]


class TupleCertificate(BaseModel):
    """Per-tuple verdict; the JSON field names are fixed"""

    model_config = ConfigDict(populate_by_name=True)

    degree: int
    tuple_: list[int] = Field(alias="tuple")
    orbit_size: int = 1
    d: int
    C: int
    D: int
    rank_q: int
    minor_gcd: int               # exact J_T on the exhaustive path, else a multiple of it
    candidates: list[CandidatePrime] = Field(default_factory=list)
    bad_primes: list[int] = Field(default_factory=list)
    unresolved_cofactor: int = 1
    status: Literal["complete", "incomplete", "degenerate"]
    matrix_hash: str

    @model_validator(mode="after")
    def _consistent(self) -> TupleCertificate:
        for cand in self.candidates:
            if (cand.verdict == "bad") != (cand.rank_mod_p < self.C):
                raise ValueError(f"prime {cand.prime}: verdict {cand.verdict} contradicts rank {cand.rank_mod_p}")
        if sorted(c.prime for c in self.candidates if c.verdict == "bad") != self.bad_primes:
            raise ValueError("bad_primes must list exactly the candidates with a bad verdict, ascending")
        if (self.status == "degenerate") != (self.rank_q < self.C):
            raise ValueError(f"status {self.status} contradicts rank over Q {self.rank_q} (C={self.C})")
        if self.status != "degenerate" and (self.status == "incomplete") != (self.unresolved_cofactor > 1):
            raise ValueError(f"status {self.status} contradicts unresolved cofactor {self.unresolved_cofactor}")
        return self

    def to_document(self) -> dict:
        return self.model_dump(mode="python", by_alias=True)


# --- Bounds -----------------------------------------------------------------
class BRun(BaseModel):
    i: int
    value: int                   # binom(i+n-2, n-2)
    multiplicity: int            # binom(d-i+n-2, n-2)


class BoundReport(BaseModel):
    n: int
    C: int
    D: int
    b_runs: list[BRun]
    threshold_index: int         # i with b_{D-C+1} = binom(i+n-2, n-2)
    bound5: int
    bound6: int
    bound5_factored: str
    bound6_factored: str
    bound5_digits: int
    bound6_digits: int

    def b_sequence(self) -> list[int]:
        return [run.value for run in self.b_runs for _ in range(run.multiplicity)]


# --- Audit ------------------------------------------------------------------
class AuditEntry(BaseModel):
    kind: Literal["warning", "error", "info"] = "info"
    code: str
    message: str
    context: dict[str, str] = {}


class Audit(BaseModel):
    validations: list[AuditEntry] = Field(default_factory=list)


# --- Degree report ----------------------------------------------------------
class Witness(BaseModel):
    prime: int
    tuple_: list[int] = Field(alias="tuple")
    rank_mod_p: int

    model_config = ConfigDict(populate_by_name=True)


class RunStats(BaseModel):
    wall_seconds: float = 0.0
    cache_hits: int = 0
    cache_misses: int = 0
    cache_writes: int = 0
    jobs: int = 1


class DegreeReport(BaseModel):
    degree: int
    degree_data: DegreeData
    symmetry: bool
    bad_primes: list[int] = Field(default_factory=list)
    witnesses: list[Witness] = Field(default_factory=list)
    tuples_processed: int = 0
    tuples_total: int = 0
    tuples_covered: int = 0
    complete: bool = False
    interrupted: bool = False
    degenerate_tuples: list[list[int]] = Field(default_factory=list)
    incomplete_tuples: list[list[int]] = Field(default_factory=list)
    bounds: BoundReport | None = None
    coefficient_maxima: list[list[int]] = Field(default_factory=list)
    audit: Audit = Field(default_factory=Audit)
    certificates: list[TupleCertificate] = Field(default_factory=list, exclude=True)
    stats: RunStats = Field(default_factory=RunStats, exclude=True)

    def witness_for(self, prime: int) -> Witness | None:
        return next((w for w in self.witnesses if w.prime == prime), None)


# --- Oracle output ----------------------------------------------------------
class WitnessReport(BaseModel):
    n: int
    p: int
    k: int = 1
    q: int
    modulus: list[int]           # irreducible modulus, highest degree first ([1, 0] for the prime field)
    searched: int                # monic polynomials enumerated
    witnesses: list[list[int]] = Field(default_factory=list)
