"""Batch verification sweeps: enumerate cases, run every check, aggregate.

A case is one (lambda, reduced word, member) triple.  Violations are
collected as findings, never raised: the sweep is a harness and a failing
identity is a result, not a crash.  Case order is deterministic (lambdas in
input order, words by length then lexicographically, members in canonical
enumeration order), and parallel runs aggregate per-lambda results back in
input order, so reports are reproducible.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cartan import CartanData, Weight
from .engine import lusztig_params, run_recursion, verify_identity, vertices
from .errors import (
    LusztigMismatchError,
    PhiMismatchError,
    StarShortfallError,
    VertexMismatchError,
)
from .hw import enumerate_crystal


@dataclass(frozen=True)
class Finding:
    kind: str
    case: dict
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "case": self.case, "detail": self.detail}


@dataclass
class VerificationReport:
    config: dict
    cases: int = 0
    failures: list[Finding] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    complete: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "config": self.config,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "elapsed_seconds": self.elapsed_seconds,
            "complete": self.complete,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=2)


def _lambda_key(lam: tuple[int, ...]) -> str:
    return ",".join(str(c) for c in lam)


def _case(lam, word, member) -> dict:
    return {"lambda": list(lam), "word": list(word), "b": list(member.b.word)}


def sweep_lambda(
    gcm: tuple[tuple[int, ...], ...],
    lam_coeffs: tuple[int, ...],
    depth: int,
    max_word_len: int,
) -> tuple[int, list[Finding], bool]:
    """All checks for one lambda; returns (cases, findings, enumeration complete).

    Takes plain tuples so it can cross a process boundary.
    """
    cartan = CartanData.from_gcm(gcm)
    lam = Weight.from_dominant(lam_coeffs)
    if len(lam.dominant) != cartan.rank:
        raise ValueError(f"lambda {lam_coeffs} has wrong rank for matrix of rank {cartan.rank}")
    enum = enumerate_crystal(cartan, lam, depth)
    words = cartan.reduced_words(max_word_len)
    longest = {w for w in words if cartan.is_longest_word(w)} if cartan.is_finite_type else set()

    findings: list[Finding] = []
    cases = 0

    # explicit phi consistency over every member and color
    for member in enum.elements:
        for i in range(1, cartan.rank + 1):
            try:
                member.phi(i)
            except PhiMismatchError as err:
                findings.append(
                    Finding("phi-consistency", _case(lam_coeffs, (i,), member), str(err))
                )

    for word in words:
        for member in enum.elements:
            cases += 1
            case = _case(lam_coeffs, word, member)
            try:
                trace = run_recursion(member.b, lam, word)
            except StarShortfallError as err:
                findings.append(Finding("applicability", case, str(err)))
                continue
            except PhiMismatchError as err:
                findings.append(Finding("phi-consistency", case, str(err)))
                continue
            if not verify_identity(trace):
                findings.append(
                    Finding(
                        "eq1",
                        case,
                        f"lhs word {list(trace.lhs.word)} != rhs word {list(trace.rhs.word)}",
                    )
                )
            try:
                vertices(trace)
            except VertexMismatchError as err:
                findings.append(Finding("eq2", case, str(err)))
            try:
                params = lusztig_params(trace)
            except LusztigMismatchError as err:
                findings.append(Finding("eq3", case, str(err)))
            else:
                if word in longest and any(n < 0 for n in params):
                    findings.append(
                        Finding("eq3", case, f"negative parameter in {params} for longest word")
                    )
    return cases, findings, enum.complete


def _sweep_lambda_star(args):
    return sweep_lambda(*args)


def run_sweep(
    cartan: CartanData,
    lambdas: list[tuple[int, ...]],
    depth: int,
    max_word_len: int,
    jobs: int = 1,
    cartan_label: str | None = None,
) -> VerificationReport:
    """Run the full sweep over a list of dominant weights."""
    config = {
        "cartan": cartan_label if cartan_label else {"gcm": [list(r) for r in cartan.gcm]},
        "lambdas": [list(l) for l in lambdas],
        "depth": depth,
        "max_word_len": max_word_len,
        "jobs": jobs,
    }
    report = VerificationReport(config=config)
    start = time.perf_counter()
    tasks = [(cartan.gcm, tuple(l), depth, max_word_len) for l in lambdas]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_lambda_star, tasks))
    else:
        results = [_sweep_lambda_star(t) for t in tasks]
    for lam, (cases, findings, complete) in zip(lambdas, results):
        report.cases += cases
        report.failures.extend(findings)
        report.complete[_lambda_key(tuple(lam))] = complete
    report.elapsed_seconds = round(time.perf_counter() - start, 6)
    return report
