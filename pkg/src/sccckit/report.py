"""Structured pass/fail records for verification runs.

Reports serialize deterministically: same suite, model, seed, trials and
tolerance must produce byte-identical JSON.  Witness morphisms are embedded
as flat row-major lists of [re, im] pairs together with their end objects.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation
from .objects import dim, format_object, parse_object

STATUSES = ("pass", "fail", "expected-fail")


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    law: str
    status: str
    witness: object = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise InvariantViolation(f"unknown status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise InvariantViolation(f"{self.check_name}: a failure needs a witness")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    model: str
    seed: int
    tolerance: float
    trials: int
    results: tuple

    schema: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "results", tuple(self.results))

    @property
    def ok(self) -> bool:
        """True when nothing failed; expected failures are successes."""
        return all(r.status != "fail" for r in self.results)

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.results:
            out[r.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "suite": self.suite,
            "model": self.model,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "trials": self.trials,
            "results": [
                {"check_name": r.check_name, "law": r.law,
                 "status": r.status, "witness": r.witness}
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True,
                          default=_plain) + "\n"

    def to_text(self) -> str:
        width = max((len(r.check_name) for r in self.results), default=0)
        lines = [f"suite={self.suite} model={self.model} seed={self.seed} "
                 f"trials={self.trials} tolerance={self.tolerance}"]
        for r in self.results:
            lines.append(f"  {r.status:>13}  {r.check_name:<{width}}  {r.law}")
        c = self.counts()
        lines.append(f"  {c['pass']} pass, {c['fail']} fail, "
                     f"{c['expected-fail']} expected-fail")
        return "\n".join(lines) + "\n"


def from_json(text: str) -> VerificationReport:
    d = json.loads(text)
    results = tuple(
        CheckResult(r["check_name"], r["law"], r["status"], r["witness"])
        for r in d["results"])
    return VerificationReport(
        suite=d["suite"], model=d["model"], seed=d["seed"],
        tolerance=d["tolerance"], trials=d["trials"], results=results,
        schema=d["schema"])


def serialize_morphism(f) -> dict:
    """Flat row-major [re, im] pairs plus the end objects as text."""
    if hasattr(f, "rep"):
        f = f.rep
    flat = np.asarray(f.array, dtype=np.complex128).ravel(order="C")
    return {
        "dom": format_object(f.dom),
        "cod": format_object(f.cod),
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }


def deserialize_morphism(d: dict, model):
    dom = parse_object(d["dom"])
    cod = parse_object(d["cod"])
    pairs = d["entries"]
    arr = np.array([complex(re, im) for re, im in pairs],
                   dtype=np.complex128).reshape(dim(cod), dim(dom))
    if model.semiring.dtype != np.complex128:
        arr = arr.real.astype(model.semiring.dtype)
    return model.morphism(dom, cod, arr)


def _plain(x):
    """JSON fallback for numpy scalars and arrays living inside witnesses."""
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.complexfloating):
        return [float(x.real), float(x.imag)]
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"not JSON serializable: {type(x)!r}")
