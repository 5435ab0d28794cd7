"""Power sums of spectra and the trace / J-LL necessary conditions.

Spectra are plain complex floats.  Power sums, however, are computed
exactly: every float is a dyadic rational, so ``sum(l**k)`` is formed in
rational arithmetic and only the final comparison sees the tolerance.
Equality cases (a one-point spectrum has ``s_k^m == s_km``) stay equal.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Poly

TOL = 1e-7


@dataclass(frozen=True)
class Spectrum:
    values: tuple[complex, ...]

    def __init__(self, values: Iterable):
        values = tuple(complex(v) for v in values)
        if not values:
            raise ValueError("a spectrum needs at least one value")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def to_json(self) -> list[list[float]]:
        return [[v.real, v.imag] for v in self.values]

    @classmethod
    def from_json(cls, data: Sequence) -> Spectrum:
        return cls(complex(re, im) for re, im in data)


def _exact_power_sums(spec: Spectrum, kmax: int) -> list[tuple[Fraction, Fraction]]:
    """``[(Re s_k, Im s_k) for k = 1..kmax]`` in exact arithmetic."""
    sums = [[Fraction(0), Fraction(0)] for _ in range(kmax)]
    for v in spec.values:
        a, b = Fraction(v.real), Fraction(v.imag)
        re, im = a, b
        for k in range(kmax):
            sums[k][0] += re
            sums[k][1] += im
            re, im = re * a - im * b, re * b + im * a
    return [(re, im) for re, im in sums]


def power_sum(spec: Spectrum, k: int) -> complex:
    if k < 1:
        raise ValueError("power must be >= 1")
    re, im = _exact_power_sums(spec, k)[-1]
    return complex(float(re), float(im))


def map_spectrum(p: Poly, spec: Spectrum) -> Spectrum:
    return Spectrum(p(complex(v)) for v in spec.values)


def circulant_spectrum(v: Sequence) -> Spectrum:
    """Eigenvalues ``q(w^j)`` of ``circ(v)`` with ``q = sum v_k x^k``.

    For real ``v`` the values at ``j`` and ``n - j`` are made exact
    conjugates.
    """
    n = len(v)
    coeffs = [float(a) for a in v]

    def q(z: complex) -> complex:
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    out: list[complex] = [0j] * n
    for j in range(n // 2 + 1):
        out[j] = q(cmath.exp(2j * cmath.pi * j / n))
        if j == 0 or 2 * j == n:
            out[j] = complex(out[j].real, 0.0)
        else:
            out[n - j] = out[j].conjugate()
    return Spectrum(out)


@dataclass(frozen=True)
class TraceCheck:
    k: int
    value: complex
    passed: bool

    def to_json(self) -> dict:
        return {"k": self.k, "value": [self.value.real, self.value.imag], "passed": self.passed}


@dataclass(frozen=True)
class JLLCheck:
    k: int
    m: int
    lhs: float
    rhs: float
    passed: bool

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "lhs": self.lhs, "rhs": self.rhs, "passed": self.passed}


def check_trace_conditions(p: Poly, spec: Spectrum, K: int, tol: float = TOL) -> list[TraceCheck]:
    """``s_k(p(spec))`` real and nonnegative for ``k = 1..K``."""
    if K < 1:
        raise ValueError("K must be >= 1")
    sums = _exact_power_sums(map_spectrum(p, spec), K)
    out = []
    for k, (re, im) in enumerate(sums, start=1):
        passed = re >= -tol and abs(im) <= tol
        out.append(TraceCheck(k, complex(float(re), float(im)), passed))
    return out


def check_jll(spec: Spectrum, K: int, M: int, tol: float = TOL) -> list[JLLCheck]:
    """``s_k^m <= n^(m-1) s_{km}`` for ``1 <= k <= K``, ``1 <= m <= M``."""
    if K < 1 or M < 1:
        raise ValueError("K and M must be >= 1")
    n = spec.n
    sums = _exact_power_sums(spec, K * M)
    tol = Fraction(tol)
    out = []
    for k in range(1, K + 1):
        for m in range(1, M + 1):
            sk, skm = sums[k - 1], sums[k * m - 1]
            lhs = sk[0] ** m
            rhs = n ** (m - 1) * skm[0]
            real = abs(sk[1]) <= tol and abs(skm[1]) <= tol
            out.append(JLLCheck(k, m, float(lhs), float(rhs), real and lhs <= rhs + tol))
    return out
