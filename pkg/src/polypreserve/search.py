"""Matrix witnesses that refute ``p(A) >= 0`` for all nonnegative ``A``.

Two families are constructive (scaled cyclic shifts and Jordan blocks) and
follow directly from the closed forms in :mod:`polypreserve.matrix`.  The
other two (random sampling, projected gradient descent on the smallest
entry of ``p(A)``) work in floating point; anything they find is rounded to
an exact rational matrix and re-verified before it is returned.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction

import numpy as np

from .matrix import (
    MatrixQ,
    cyclic_shift,
    embed_diag,
    eval_on_jordan,
    jordan_block,
    mat_poly_eval,
    matrix_from_json,
)
from .poly import Poly, as_fraction, format_fraction, residue_decompose

log = logging.getLogger(__name__)

PROVENANCES = ("circulant", "jordan-zero", "jordan", "random", "descent")

# float objective below this counts as a candidate witness
FLOAT_THRESHOLD = -1e-6
RATIONAL_DENOMINATOR = 10**6


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    trials: int = 1000
    restarts: int = 50
    steps: int = 200
    step_size: float = 0.1
    entry_scale: float = 4.0
    t_cap: Fraction = Fraction(2**64)

    def __post_init__(self):
        object.__setattr__(self, "t_cap", as_fraction(self.t_cap))
        for name in ("trials", "restarts", "steps"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not self.step_size > 0:
            raise ValueError("step_size must be positive")
        if not self.entry_scale > 0:
            raise ValueError("entry_scale must be positive")
        if self.t_cap < 1:
            raise ValueError("t_cap must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def to_json(self) -> dict:
        data = asdict(self)
        data["t_cap"] = format_fraction(self.t_cap)
        return data

    @classmethod
    def from_json(cls, data: dict) -> SearchConfig:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown search settings: {sorted(unknown)}")
        kwargs = dict(data)
        if "t_cap" in kwargs:
            kwargs["t_cap"] = Fraction(str(kwargs["t_cap"]))
        for name in ("seed", "trials", "restarts", "steps"):
            if name in kwargs:
                kwargs[name] = int(kwargs[name])
        for name in ("step_size", "entry_scale"):
            if name in kwargs:
                kwargs[name] = float(kwargs[name])
        return cls(**kwargs)


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    provenance: str | None = None
    matrix: MatrixQ | None = None
    entry: tuple[int, int] | None = None
    value: Fraction | None = None
    t: Fraction | None = None
    stats: dict = field(default_factory=dict, compare=False)

    @classmethod
    def none(cls, **stats) -> WitnessResult:
        return cls(False, stats=stats)

    def to_json(self) -> dict:
        if not self.found:
            return {"found": False, "stats": self.stats}
        return {
            "found": True,
            "provenance": self.provenance,
            "matrix": self.matrix.to_json(),
            "entry": list(self.entry),
            "value": format_fraction(self.value),
            "t": None if self.t is None else format_fraction(self.t),
            "stats": self.stats,
        }

    @classmethod
    def from_json(cls, data: dict) -> WitnessResult:
        if not data["found"]:
            return cls(False, stats=data.get("stats", {}))
        return cls(
            True,
            provenance=data["provenance"],
            matrix=matrix_from_json(data["matrix"]),
            entry=tuple(data["entry"]),
            value=Fraction(data["value"]),
            t=None if data.get("t") is None else Fraction(data["t"]),
            stats=data.get("stats", {}),
        )

    def embedded(self) -> WitnessResult:
        """The same certificate lifted to one order higher via ``diag(W, 0)``."""
        if not self.found:
            return self
        return WitnessResult(
            True, self.provenance, embed_diag(self.matrix), self.entry,
            self.value, self.t, self.stats,
        )


def verify_witness(p: Poly, W: MatrixQ, entry: tuple[int, int], value: Fraction | None = None) -> bool:
    """Exact check: ``W >= 0`` and entry ``(i, j)`` of ``p(W)`` is negative
    (and equals ``value`` when given)."""
    if not W.is_nonnegative():
        return False
    got = mat_poly_eval(p, W).entry(*entry)
    return got < 0 and (value is None or got == value)


def _exact_witness(p: Poly, W: MatrixQ, provenance: str, t=None, **stats) -> WitnessResult | None:
    if not W.is_nonnegative():
        return None
    where, value = mat_poly_eval(p, W).min_entry()
    if value >= 0:
        return None
    return WitnessResult(True, provenance, W, where, value, t, stats)


def lift(result: WitnessResult, n: int) -> WitnessResult:
    """Embed a witness of order ``<= n`` into order ``n``."""
    while result.found and result.matrix.n < n:
        result = result.embedded()
    return result


# constructive witnesses --------------------------------------------------


def circulant_witness_at(p: Poly, n: int, t) -> WitnessResult:
    """Try ``t C_n`` for one ``t >= 0``.  The smallest residue with a negative
    part value wins; its entry sits at ``(1, r + 1)``."""
    t = as_fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    values = residue_decompose(p, n).values_at(t)
    for r, v in enumerate(values):
        if v < 0:
            return WitnessResult(True, "circulant", cyclic_shift(n).scale(t), (1, r + 1), v, t)
    return WitnessResult.none()


def circulant_witness(p: Poly, n: int, t_cap=Fraction(2**64)) -> WitnessResult:
    """Doubling scan ``t = 1, 2, 4, ...`` up to ``t_cap`` over ``p(t C_n)``.

    Terminates with a witness whenever some residue part has a negative
    leading coefficient.
    """
    t_cap = as_fraction(t_cap)
    t = Fraction(1)
    tried = 0
    while t <= t_cap:
        tried += 1
        res = circulant_witness_at(p, n, t)
        if res.found:
            return res
        t *= 2
    return WitnessResult.none(scanned=tried)


def jordan_witness(p: Poly, n: int, t=0) -> WitnessResult:
    """Inspect the first row of ``p(J_n(t))`` (entries ``p^(k)(t)/k!``)."""
    t = as_fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    values = eval_on_jordan(p, n, t).rows[0]
    for k, v in enumerate(values):
        if v < 0:
            prov = "jordan-zero" if t == 0 else "jordan"
            return WitnessResult(True, prov, jordan_block(n, t), (1, k + 1), v, t)
    return WitnessResult.none()


def constructive_witness(p: Poly, n: int, t_cap=Fraction(2**64)) -> WitnessResult:
    res = circulant_witness(p, n, t_cap)
    if res.found:
        return res
    return jordan_witness(p, n)


# float machinery ---------------------------------------------------------


def _float_coeffs(p: Poly) -> np.ndarray:
    return np.array([float(c) for c in p.coeffs])


def float_poly_eval(coeffs: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Horner on a float matrix (or a stack of them, shape ``(..., n, n)``)."""
    n = A.shape[-1]
    eye = np.eye(n)
    if len(coeffs) == 0:
        return np.zeros_like(A)
    acc = np.broadcast_to(coeffs[-1] * eye, A.shape).copy()
    for c in coeffs[-2::-1]:
        acc = acc @ A + c * eye
    return acc


def entry_gradient(coeffs: np.ndarray, A: np.ndarray, u: int, v: int) -> np.ndarray:
    """Gradient of entry ``(u, v)`` (0-based) of ``p(A)`` with respect to ``A``.

    ``d p(A)_uv / d A_ij = sum_k a_k sum_{s+t=k-1} (A^s)_{ui} (A^t)_{jv}``.
    """
    n = A.shape[0]
    m = len(coeffs) - 1
    powers = [np.eye(n)]
    for _ in range(max(m - 1, 0)):
        powers.append(powers[-1] @ A)
    grad = np.zeros((n, n))
    for k in range(1, m + 1):
        if coeffs[k] == 0:
            continue
        for s in range(k):
            grad += coeffs[k] * np.outer(powers[s][u, :], powers[k - 1 - s][:, v])
    return grad


def directional_derivative(coeffs: np.ndarray, A: np.ndarray, u: int, v: int, E: np.ndarray) -> float:
    return float(np.sum(entry_gradient(coeffs, A, u, v) * E))


def _rationalize_and_verify(p: Poly, A: np.ndarray, provenance: str, **stats) -> WitnessResult | None:
    W = MatrixQ.from_float(np.maximum(A, 0.0), RATIONAL_DENOMINATOR)
    return _exact_witness(p, W, provenance, **stats)


def _structured_sample(rng: np.random.Generator, n: int, scale: float) -> np.ndarray:
    kind = rng.integers(3)
    t = rng.uniform(0, scale)
    if kind == 0:
        return t * np.eye(n)[rng.permutation(n)]
    if kind == 1:
        v = np.zeros(n)
        v[rng.integers(n)] = 1.0
        v += rng.uniform(0, 0.25, n) * (rng.random(n) < 0.5)
        idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
        return t * v[idx]
    return t * np.eye(n) + np.eye(n, k=1)


def random_search(p: Poly, n: int, cfg: SearchConfig = SearchConfig()) -> WitnessResult:
    """Uniform samples on ``[0, entry_scale]^(n x n)``; every 10th trial is a
    structured matrix (scaled permutation, near-circulant, Jordan block)."""
    if p.is_zero():
        return WitnessResult.none(trials=0)
    rng = np.random.default_rng([cfg.seed, 0])
    coeffs = _float_coeffs(p)
    for trial in range(cfg.trials):
        if trial % 10 == 9:
            A = _structured_sample(rng, n, cfg.entry_scale)
        else:
            A = rng.uniform(0.0, cfg.entry_scale, (n, n))
        P = float_poly_eval(coeffs, A)
        if P.min() < FLOAT_THRESHOLD:
            res = _rationalize_and_verify(p, A, "random", trials=trial + 1)
            if res is not None:
                return res
            log.debug("trial %d: float candidate failed exact check", trial)
    return WitnessResult.none(trials=cfg.trials)


def descent_search(p: Poly, n: int, A0: np.ndarray, cfg: SearchConfig = SearchConfig()) -> WitnessResult:
    """Projected gradient descent on ``min_uv p(A)_uv`` over ``A >= 0``.

    Each step moves against the gradient of the currently smallest entry
    (with components blocked by the ``A >= 0`` boundary removed), normalized
    to length ``step_size``, then clamps at zero.
    """
    A = np.array(A0, dtype=float)
    if A.shape != (n, n):
        raise ValueError(f"starting matrix must be {n}x{n}")
    if (A < 0).any():
        raise ValueError("starting matrix must be nonnegative")
    if p.is_zero():
        return WitnessResult.none(steps=0)
    coeffs = _float_coeffs(p)
    for step in range(cfg.steps + 1):
        P = float_poly_eval(coeffs, A)
        u, v = np.unravel_index(np.argmin(P), P.shape)
        if P[u, v] < FLOAT_THRESHOLD:
            res = _rationalize_and_verify(p, A, "descent", steps=step)
            if res is not None:
                return res
        if step == cfg.steps:
            break
        G = entry_gradient(coeffs, A, u, v)
        # components pushing a zero entry negative are blocked by the constraint
        G[(A <= 0) & (G > 0)] = 0.0
        norm = np.linalg.norm(G)
        if norm == 0 or not np.isfinite(norm):
            break
        A = np.maximum(A - cfg.step_size * G / norm, 0.0)
    return WitnessResult.none(steps=cfg.steps)


def multistart_descent(p: Poly, n: int, cfg: SearchConfig = SearchConfig()) -> WitnessResult:
    """``cfg.restarts`` independent descents; restart ``i`` draws its start
    from the stream seeded by ``(seed, 1, i)``."""
    for lane in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, 1, lane])
        A0 = rng.uniform(0.0, cfg.entry_scale, (n, n))
        res = descent_search(p, n, A0, cfg)
        if res.found:
            return WitnessResult(
                True, res.provenance, res.matrix, res.entry, res.value, res.t,
                {**res.stats, "restart": lane},
            )
    return WitnessResult.none(restarts=cfg.restarts, steps=cfg.steps)


def search(p: Poly, n: int, cfg: SearchConfig = SearchConfig()) -> WitnessResult:
    """Random sampling first, then multistart descent."""
    res = random_search(p, n, cfg)
    if res.found:
        return res
    res2 = multistart_descent(p, n, cfg)
    if res2.found:
        return res2
    return WitnessResult.none(trials=cfg.trials, restarts=cfg.restarts, steps=cfg.steps)
