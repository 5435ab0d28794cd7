"""Quick seeded invariant checks, run by ``polypreserve selftest``."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

import numpy as np

from .matrix import (
    MatrixQ,
    cyclic_shift,
    embed_diag,
    eval_on_jordan,
    eval_on_scaled_circulant,
    jordan_block,
    mat_poly_eval,
)
from .membership import NON_MEMBER, classify, is_nonneg_on_halfline
from .poly import Poly, residue_decompose, residue_part, roots_of_unity_part
from .search import directional_derivative, float_poly_eval, verify_witness
from .spectra import check_jll, check_trace_conditions, circulant_spectrum


def random_poly(rng: random.Random, max_deg: int, bound: int = 20) -> Poly:
    deg = rng.randint(0, max_deg)
    return Poly(
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg + 1)
    )


def _partition(rng):
    for _ in range(100):
        p = random_poly(rng, 12)
        n = rng.randint(1, 8)
        dec = residue_decompose(p, n)
        if dec.total() != p:
            return False
        for r, part in enumerate(dec.parts):
            if any(c and k % n != r for k, c in enumerate(part.coeffs)):
                return False
    return True


def _unity(rng):
    for _ in range(50):
        p = random_poly(rng, 12)
        n = rng.randint(1, 8)
        r = rng.randrange(n)
        x = complex(rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4))
        if abs(roots_of_unity_part(p, n, r, x) - residue_part(p, n, r)(x)) > 1e-8:
            return False
    return True


def _circulant_closed_form(rng):
    for _ in range(40):
        p = random_poly(rng, 10)
        n = rng.randint(1, 5)
        t = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
        if eval_on_scaled_circulant(p, n, t) != mat_poly_eval(p, cyclic_shift(n).scale(t)):
            return False
    return True


def _jordan_closed_form(rng):
    for _ in range(40):
        p = random_poly(rng, 10)
        n = rng.randint(1, 5)
        t = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
        if eval_on_jordan(p, n, t) != mat_poly_eval(p, jordan_block(n, t)):
            return False
    return True


def _shift_powers(rng):
    for n in range(1, 7):
        C = cyclic_shift(n)
        P = MatrixQ.identity(n)
        powers = [P]
        for _ in range(20):
            P = P @ C
            powers.append(P)
        if any(powers[k] != powers[k % n] for k in range(21)):
            return False
    return True


def _witness_soundness(rng):
    for _ in range(20):
        p = random_poly(rng, 7, bound=5)
        n = rng.randint(2, 3)
        v = classify(p, n)
        if v.status == NON_MEMBER:
            w = v.witness
            if not verify_witness(p, w.matrix, w.entry, w.value):
                return False
            if not verify_witness(p, embed_diag(w.matrix), w.entry, w.value):
                return False
    return True


def _halfline(rng):
    for _ in range(60):
        p = random_poly(rng, 8, bound=9)
        ok, x = is_nonneg_on_halfline(p)
        if not ok and not p(x) < 0:
            return False
        if ok:
            coeffs = np.array([float(c) for c in p.coeffs][::-1] or [0.0])
            grid = np.linspace(0, 50, 2001)
            vals = np.polyval(coeffs, grid)
            for g in grid[vals < -1e-9]:
                if p(Fraction(g)) < 0:
                    return False
    return True


def _gradient(rng):
    nrng = np.random.default_rng(rng.randrange(2**32))
    h = 1e-6
    for _ in range(10):
        coeffs = nrng.integers(-5, 6, nrng.integers(2, 7)).astype(float)
        A = nrng.uniform(0, 1, (3, 3))
        E = nrng.uniform(-1, 1, (3, 3))
        u, v = nrng.integers(3, size=2)
        exact = directional_derivative(coeffs, A, u, v, E)
        fd = (float_poly_eval(coeffs, A + h * E)[u, v] - float_poly_eval(coeffs, A - h * E)[u, v]) / (2 * h)
        if abs(exact - fd) > 1e-4 * max(abs(exact), 1e-12):
            return False
    return True


def _jll(rng):
    for _ in range(30):
        v = [rng.uniform(0, 4) for _ in range(rng.randint(1, 6))]
        spec = circulant_spectrum(v)
        if not all(c.passed for c in check_jll(spec, 4, 4)):
            return False
        if not all(c.passed for c in check_trace_conditions(Poly.x(), spec, 4)):
            return False
    return True


CHECKS: dict[str, Callable[[random.Random], bool]] = {
    "residue parts partition p": _partition,
    "roots-of-unity average matches exact part": _unity,
    "p(tC) closed form matches Horner": _circulant_closed_form,
    "p(J_n(t)) closed form matches Horner": _jordan_closed_form,
    "C_n^k == C_n^(k mod n)": _shift_powers,
    "non-member witnesses verify and embed": _witness_soundness,
    "half-line decision agrees with sampling": _halfline,
    "entry gradient matches finite differences": _gradient,
    "circulant spectra satisfy trace and J-LL": _jll,
}


def run(seed: int = 0) -> list[tuple[str, bool]]:
    results = []
    for name, check in CHECKS.items():
        results.append((name, bool(check(random.Random(f"{seed}:{name}")))))
    return results
