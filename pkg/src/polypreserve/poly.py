"""Exact polynomials over the rationals and their residue-class parts.

A polynomial is stored densely, lowest degree first, with trailing zeros
trimmed so that ``coeffs[-1]`` is always the leading coefficient.  The zero
polynomial has an empty coefficient tuple and degree ``None``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: silently turning 0.1 into 3602879701896397/2**55
    is never what the caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(as_fraction(c) for c in coeffs))

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def constant(cls, c: Number) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Parse ``"a0,a1,...,am"`` where each entry is ``num`` or ``num/den``."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        try:
            return cls(Fraction(part.strip()) for part in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad coefficient list {text!r}: {exc}") from None

    def to_json(self) -> list[str]:
        return [format_fraction(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls(Fraction(s) for s in data)

    # basic queries ------------------------------------------------------

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        size = max(len(self), len(other))
        return Poly(self[k] + other[k] for k in range(size))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly.zero()
            out = [Fraction(0)] * (len(self) + len(other) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        try:
            alpha = as_fraction(other)
        except TypeError:
            return NotImplemented
        return Poly(alpha * c for c in self.coeffs)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other) - 1
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    # evaluation ---------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation.  Exact for rational ``x``; works for any ring
        element supporting ``*`` and ``+`` with Fractions (e.g. complex)."""
        if isinstance(x, (complex, float)):
            coeffs = [complex(c) if isinstance(x, complex) else float(c) for c in self.coeffs]
        else:
            coeffs = self.coeffs
        acc = coeffs[-1] if coeffs else 0 * x
        for c in reversed(coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> Poly:
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        coeffs = list(self.coeffs)
        for _ in range(k):
            coeffs = [j * coeffs[j] for j in range(1, len(coeffs))]
        return Poly(coeffs)

    def compose(self, inner: Poly) -> Poly:
        """``self(inner(x))`` by Horner's scheme over polynomials."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# free-function spellings of the ring operations

def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_compose(p: Poly, q: Poly) -> Poly:
    return p.compose(q)


def poly_derivative(p: Poly, k: int = 1) -> Poly:
    return p.derivative(k)


def poly_eval(p: Poly, x):
    return p(x)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via Euclid; gcd(0, 0) is the zero polynomial."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_part(p: Poly) -> Poly:
    """``p / gcd(p, p')``: same roots as ``p``, each of multiplicity one."""
    if p.is_zero() or p.degree == 0:
        return p
    return p // poly_gcd(p, p.derivative())


# residue-class parts ---------------------------------------------------


def _check_residue(n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if not 0 <= r < n:
        raise ValueError(f"residue {r} out of range for modulus {n}")


def residue_index_set(m: int, n: int, r: int) -> list[int]:
    """Exponents ``k`` with ``0 <= k <= m`` and ``k % n == r``."""
    _check_residue(n, r)
    return list(range(r, m + 1, n))


def residue_part(p: Poly, n: int, r: int) -> Poly:
    """Keep only the monomials of ``p`` whose exponent is ``r`` mod ``n``."""
    _check_residue(n, r)
    return Poly(c if k % n == r else 0 for k, c in enumerate(p.coeffs))


@dataclass(frozen=True)
class ResidueDecomposition:
    n: int
    parts: tuple[Poly, ...]

    def total(self) -> Poly:
        acc = Poly.zero()
        for part in self.parts:
            acc = acc + part
        return acc

    def values_at(self, t) -> list:
        return [part(t) for part in self.parts]

    def to_json(self) -> dict:
        return {"n": self.n, "parts": [part.to_json() for part in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> ResidueDecomposition:
        return cls(int(data["n"]), tuple(Poly.from_json(p) for p in data["parts"]))


def residue_decompose(p: Poly, n: int) -> ResidueDecomposition:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return ResidueDecomposition(n, tuple(residue_part(p, n, r) for r in range(n)))


def roots_of_unity_part(p: Poly, n: int, r: int, x: complex) -> complex:
    """Float evaluation of the r-mod-n part as an average over rotations
    ``(1/n) * sum_k w^(-k r) p(w^k x)`` with ``w = exp(2 pi i / n)``.

    Only used to cross-check :func:`residue_part`.
    """
    _check_residue(n, r)
    x = complex(x)
    total = 0j
    for k in range(n):
        w = cmath.exp(2j * cmath.pi * k / n)
        total += cmath.exp(-2j * cmath.pi * k * r / n) * p(w * x)
    return total / n
