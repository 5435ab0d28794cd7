"""Deciding, bounding or refuting ``p in P_n``.

``P_n`` is the set of real polynomials with ``p(A) >= 0`` entrywise for
every entrywise-nonnegative ``n x n`` matrix ``A``.  Membership is decided
exactly when ``n == 1`` (nonnegativity on ``[0, inf)``) and when
``deg p < 2n`` (nonnegative coefficients).  Otherwise a battery of
necessary conditions is run; every failed condition comes with an exact
matrix witness, and if nothing fails a numerical search is attempted
before giving up with ``Unknown``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .poly import Poly, format_fraction, residue_part
from .search import (
    SearchConfig,
    WitnessResult,
    circulant_witness,
    circulant_witness_at,
    constructive_witness,
    jordan_witness,
    lift,
    search,
    verify_witness,
)
from .sturm import halfline_sample_points

MEMBER = "Member"
NON_MEMBER = "NonMember"
UNKNOWN = "Unknown"

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


def _jsonable(value):
    return format_fraction(value) if isinstance(value, Fraction) else value


def _from_jsonable(key: str, value):
    if isinstance(value, str) and key in ("value", "point", "sum"):
        return Fraction(value)
    return value


@dataclass(frozen=True)
class ConditionEntry:
    name: str
    params: dict
    status: str
    violation: dict | None = None

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def sort_key(self):
        return (self.name, tuple(sorted(self.params.items())))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "status": self.status,
            "violation": None
            if self.violation is None
            else {k: _jsonable(v) for k, v in self.violation.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> ConditionEntry:
        violation = data.get("violation")
        if violation is not None:
            violation = {k: _from_jsonable(k, v) for k, v in violation.items()}
        return cls(data["name"], dict(data["params"]), data["status"], violation)


@dataclass(frozen=True)
class Verdict:
    status: str
    n: int
    poly: Poly
    reason: str
    witness: WitnessResult | None = None
    failed_condition: ConditionEntry | None = None
    report: tuple[ConditionEntry, ...] = ()
    search: dict | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "n": self.n,
            "poly": self.poly.to_json(),
            "reason": self.reason,
            "witness": None if self.witness is None else self.witness.to_json(),
            "failed_condition": None
            if self.failed_condition is None
            else self.failed_condition.to_json(),
            "report": [e.to_json() for e in self.report],
            "search": self.search,
        }

    @classmethod
    def from_json(cls, data: dict) -> Verdict:
        return cls(
            status=data["status"],
            n=int(data["n"]),
            poly=Poly.from_json(data["poly"]),
            reason=data["reason"],
            witness=None if data.get("witness") is None else WitnessResult.from_json(data["witness"]),
            failed_condition=None
            if data.get("failed_condition") is None
            else ConditionEntry.from_json(data["failed_condition"]),
            report=tuple(ConditionEntry.from_json(e) for e in data.get("report", [])),
            search=data.get("search"),
        )


# the P_1 decision -----------------------------------------------------------


def is_nonneg_on_halfline(p: Poly) -> tuple[bool, Fraction | None]:
    """``(True, None)`` iff ``p(x) >= 0`` for all ``x >= 0``; otherwise
    ``(False, x)`` with a rational ``x >= 0`` where ``p(x) < 0`` exactly."""
    if p.is_zero():
        return True, None
    for x in halfline_sample_points(p):
        if p(x) < 0:
            return False, x
    return True, None


# necessary conditions -------------------------------------------------------


def check_first_n_terms(p: Poly, n: int) -> ConditionEntry:
    """``a_0, ..., a_{n-1} >= 0`` (all coefficients when ``deg p < n - 1``)."""
    params = {"n": n}
    for k, a in enumerate(p.coeffs[:n]):
        if a < 0:
            return ConditionEntry("first_n_terms", params, FAIL, {"index": k, "value": a})
    return ConditionEntry("first_n_terms", params, PASS)


def check_last_n_terms(p: Poly, n: int) -> ConditionEntry:
    """``a_{m-n+1}, ..., a_m >= 0``; only meaningful when ``deg p > n``."""
    params = {"n": n}
    m = p.degree
    if m is None or m <= n:
        return ConditionEntry("last_n_terms", params, NOT_APPLICABLE)
    for k in range(m - n + 1, m + 1):
        if p[k] < 0:
            return ConditionEntry("last_n_terms", params, FAIL, {"index": k, "value": p[k]})
    return ConditionEntry("last_n_terms", params, PASS)


def check_residue_sums(p: Poly, n: int) -> list[ConditionEntry]:
    """``sum_{k = r mod nh} a_k >= 0`` for every ``nh <= n`` and ``r < nh``."""
    out = []
    for nh in range(1, n + 1):
        for r in range(nh):
            params = {"n_hat": nh, "r": r}
            total = sum(p.coeffs[r::nh], Fraction(0))
            if total < 0:
                out.append(ConditionEntry("residue_sum", params, FAIL, {"sum": total}))
            else:
                out.append(ConditionEntry("residue_sum", params, PASS))
    return out


def check_derivatives_P1(p: Poly, n: int) -> list[ConditionEntry]:
    """``p, p', ..., p^(n-1)`` each nonnegative on ``[0, inf)``."""
    out = []
    for k in range(n):
        ok, x = is_nonneg_on_halfline(p.derivative(k))
        params = {"k": k}
        if ok:
            out.append(ConditionEntry("derivative_P1", params, PASS))
        else:
            value = p.derivative(k)(x)
            out.append(ConditionEntry("derivative_P1", params, FAIL, {"point": x, "value": value}))
    return out


def check_residue_parts_P1(p: Poly, n: int) -> list[ConditionEntry]:
    """Every ``r mod nh`` part, ``nh <= n``, nonnegative on ``[0, inf)``."""
    out = []
    for nh in range(1, n + 1):
        for r in range(nh):
            part = residue_part(p, nh, r)
            ok, x = is_nonneg_on_halfline(part)
            params = {"n_hat": nh, "r": r}
            if ok:
                out.append(ConditionEntry("residue_part_P1", params, PASS))
            else:
                out.append(
                    ConditionEntry("residue_part_P1", params, FAIL, {"point": x, "value": part(x)})
                )
    return out


def witness_for(p: Poly, n: int, entry: ConditionEntry, cfg: SearchConfig) -> WitnessResult:
    """Turn a failed condition into an exact witness of order ``n``."""
    v = entry.violation
    if entry.name == "first_n_terms":
        res = jordan_witness(p, n)
    elif entry.name == "last_n_terms":
        res = circulant_witness(p, n, cfg.t_cap)
    elif entry.name == "residue_sum":
        res = circulant_witness_at(p, entry.params["n_hat"], 1)
    elif entry.name == "derivative_P1":
        res = jordan_witness(p, n, v["point"])
    elif entry.name == "residue_part_P1":
        res = circulant_witness_at(p, entry.params["n_hat"], v["point"])
    else:
        raise ValueError(f"no witness construction for {entry.name}")
    return lift(res, n)


# cheapest first: coefficient scans, residue sums, then the Sturm-based checks
BATTERY: tuple[Callable[[Poly, int], ConditionEntry | list[ConditionEntry]], ...] = (
    check_first_n_terms,
    check_last_n_terms,
    check_residue_sums,
    check_derivatives_P1,
    check_residue_parts_P1,
)


CONDITION_COST = {
    "first_n_terms": 0,
    "last_n_terms": 1,
    "residue_sum": 2,
    "derivative_P1": 3,
    "residue_part_P1": 4,
}


def run_battery(p: Poly, n: int, stop_on_failure: bool = False) -> list[ConditionEntry]:
    """Run the necessary conditions in cost order; the returned report is
    sorted by condition name and parameters."""
    report: list[ConditionEntry] = []
    for check in BATTERY:
        got = check(p, n)
        entries = [got] if isinstance(got, ConditionEntry) else got
        report.extend(entries)
        if stop_on_failure and any(e.failed for e in entries):
            break
    return sorted(report, key=ConditionEntry.sort_key)


def _checked(p: Poly, res: WitnessResult) -> WitnessResult:
    # nothing leaves this module unverified
    if res.found and not verify_witness(p, res.matrix, res.entry, res.value):
        raise AssertionError(f"witness failed exact verification: {res}")
    return res


def decide_low_degree(p: Poly, n: int, cfg: SearchConfig = SearchConfig()) -> Verdict:
    """Exact decision for ``deg p < 2n``: member iff all coefficients are
    nonnegative."""
    if n < 1:
        raise ValueError("n must be positive")
    m = p.degree
    if m is not None and m >= 2 * n:
        raise ValueError(f"deg p = {m} >= 2n = {2 * n}; use classify()")
    if p.is_zero():
        return Verdict(MEMBER, n, p, "zero-polynomial")
    if p.has_nonnegative_coefficients():
        return Verdict(MEMBER, n, p, "low-degree-nonnegative-coefficients")
    res = _checked(p, constructive_witness(p, n, cfg.t_cap))
    if not res.found:
        raise AssertionError("low-degree polynomial with a negative coefficient has no witness")
    return Verdict(NON_MEMBER, n, p, "low-degree-negative-coefficient", witness=res)


def classify(p: Poly, n: int, cfg: SearchConfig = SearchConfig()) -> Verdict:
    if n < 1:
        raise ValueError("n must be positive")
    if p.is_zero():
        return Verdict(MEMBER, n, p, "zero-polynomial")
    if p.has_nonnegative_coefficients():
        return Verdict(MEMBER, n, p, "nonnegative-coefficients")
    if p.degree < 2 * n:
        return decide_low_degree(p, n, cfg)
    if n == 1:
        ok, x = is_nonneg_on_halfline(p)
        if ok:
            return Verdict(MEMBER, n, p, "nonnegative-on-halfline")
        res = _checked(p, circulant_witness_at(p, 1, x))
        return Verdict(NON_MEMBER, n, p, "negative-on-halfline", witness=res)

    report = run_battery(p, n, stop_on_failure=True)
    failures = [e for e in report if e.failed]
    failures.sort(key=lambda e: (CONDITION_COST[e.name], e.sort_key()))
    for entry in failures:
        res = _checked(p, witness_for(p, n, entry, cfg))
        if res.found:
            return Verdict(NON_MEMBER, n, p, "failed-necessary-condition",
                           witness=res, failed_condition=entry, report=tuple(report))

    res = _checked(p, search(p, n, cfg))
    stats = {"config": cfg.to_json(), **res.stats}
    if res.found:
        return Verdict(NON_MEMBER, n, p, "search-witness", witness=res,
                       report=tuple(report), search=stats)
    return Verdict(UNKNOWN, n, p, "conditions-pass-search-exhausted",
                   report=tuple(report), search=stats)
