"""Exact square matrices, circulant and Jordan constructions, and
polynomial evaluation at a matrix argument.

Entries are stored 0-based internally.  Anything that reports an entry
location to the outside (witness certificates, JSON) uses 1-based
``(row, column)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .poly import Poly, as_fraction, format_fraction, residue_decompose


@dataclass(frozen=True)
class MatrixQ:
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_fraction(a) for a in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int, scale: Fraction | int = 1) -> MatrixQ:
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> MatrixQ:
        return cls([[0] * n for _ in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access, ``a_ij``."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i}, {j}) outside a {self.n}x{self.n} matrix")
        return self.rows[i - 1][j - 1]

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for row in self.rows for a in row)

    def min_entry(self) -> tuple[tuple[int, int], Fraction]:
        """Smallest entry and its 1-based location (first in row-major order)."""
        best = None
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if best is None or a < best[1]:
                    best = ((i + 1, j + 1), a)
        return best

    def __add__(self, other: MatrixQ) -> MatrixQ:
        self._check_same(other)
        return MatrixQ(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other: MatrixQ) -> MatrixQ:
        self._check_same(other)
        return MatrixQ(
            [a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def scale(self, alpha) -> MatrixQ:
        alpha = as_fraction(alpha)
        return MatrixQ([alpha * a for a in row] for row in self.rows)

    def __matmul__(self, other: MatrixQ) -> MatrixQ:
        self._check_same(other)
        cols = list(zip(*other.rows))
        return MatrixQ(
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
            for row in self.rows
        )

    def add_identity(self, c) -> MatrixQ:
        c = as_fraction(c)
        return MatrixQ(
            [a + c if i == j else a for j, a in enumerate(row)]
            for i, row in enumerate(self.rows)
        )

    def _check_same(self, other: MatrixQ) -> None:
        if not isinstance(other, MatrixQ) or other.n != self.n:
            raise ValueError("matrix orders differ")

    def to_float(self) -> np.ndarray:
        return np.array([[float(a) for a in row] for row in self.rows])

    @classmethod
    def from_float(cls, A: np.ndarray, denominator: int = 10**6) -> MatrixQ:
        """Truncate float entries toward zero onto the grid ``k/denominator``.

        Truncation keeps nonnegative entries nonnegative.
        """
        A = np.asarray(A, dtype=float)
        return cls(
            [Fraction(int(a * denominator), denominator) for a in row] for row in A
        )

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[format_fraction(a) for a in row] for row in self.rows]}

    def __str__(self) -> str:
        cells = [[str(a) for a in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


@dataclass(frozen=True)
class CirculantSpec:
    """Reference vector ``v``; realizes ``a_ij = v[(j - i) mod n]`` (0-based v)."""

    v: tuple[Fraction, ...]

    def __init__(self, v: Iterable):
        v = tuple(as_fraction(a) for a in v)
        if not v:
            raise ValueError("reference vector must be nonempty")
        object.__setattr__(self, "v", v)

    def realize(self) -> MatrixQ:
        return circulant(self.v)


@dataclass(frozen=True)
class JordanSpec:
    n: int
    lam: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Jordan block order must be >= 1")
        object.__setattr__(self, "lam", as_fraction(self.lam))

    def realize(self) -> MatrixQ:
        return jordan_block(self.n, self.lam)


def matrix_from_json(data: dict) -> MatrixQ:
    """Accepts the dense form and the compact ``circ`` / ``jordan`` forms."""
    if "circ" in data:
        return CirculantSpec(Fraction(s) for s in data["circ"]).realize()
    if "jordan" in data:
        spec = data["jordan"]
        return JordanSpec(int(spec["n"]), Fraction(spec["lambda"])).realize()
    rows = [[Fraction(s) for s in row] for row in data["rows"]]
    A = MatrixQ(rows)
    if "n" in data and int(data["n"]) != A.n:
        raise ValueError(f"declared order {data['n']} does not match {A.n} rows")
    return A


def circulant(v: Sequence) -> MatrixQ:
    n = len(v)
    return MatrixQ([[v[(j - i) % n] for j in range(n)] for i in range(n)])


def circulant_realize(spec: CirculantSpec) -> MatrixQ:
    return spec.realize()


def cyclic_shift(n: int) -> MatrixQ:
    """The basic circulant ``C_n`` (reference vector e_2); ``C_1 = [1]``."""
    return circulant([1] if n == 1 else [0, 1] + [0] * (n - 2))


def circulant_poly(v: Sequence) -> Poly:
    """The polynomial ``q`` with ``q(C_n) = circ(v)``."""
    return Poly(v)


circulant_poly_identity = circulant_poly


def jordan_block(n: int, lam) -> MatrixQ:
    lam = as_fraction(lam)
    return MatrixQ(
        [lam if j == i else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)
    )


def jordan_realize(spec: JordanSpec) -> MatrixQ:
    return spec.realize()


def mat_poly_eval(p: Poly, A: MatrixQ) -> MatrixQ:
    """Dense ``p(A)`` by Horner's scheme."""
    if p.is_zero():
        return MatrixQ.zeros(A.n)
    acc = MatrixQ.identity(A.n, p.leading)
    for c in reversed(p.coeffs[:-1]):
        acc = (acc @ A).add_identity(c)
    return acc


def eval_on_scaled_circulant(p: Poly, n: int, t) -> MatrixQ:
    """``p(t C_n)`` from the residue parts: ``circ(p_0(t), ..., p_{n-1}(t))``."""
    t = as_fraction(t)
    return circulant(residue_decompose(p, n).values_at(t))


def eval_on_jordan(p: Poly, n: int, t) -> MatrixQ:
    """``p(J_n(t))``: upper triangular Toeplitz with ``p^(k)(t)/k!`` on the
    k-th superdiagonal."""
    t = as_fraction(t)
    diag = [p.derivative(k)(t) / factorial(k) for k in range(n)]
    return MatrixQ(
        [diag[j - i] if j >= i else 0 for j in range(n)] for i in range(n)
    )


def embed_diag(A: MatrixQ) -> MatrixQ:
    """``diag(A, 0)`` of order ``n + 1``."""
    n = A.n
    rows = [list(row) + [Fraction(0)] for row in A.rows]
    rows.append([Fraction(0)] * (n + 1))
    return MatrixQ(rows)
