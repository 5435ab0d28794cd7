"""Exact real-root isolation on the positive half-line with Sturm sequences."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, squarefree_part


def sturm_sequence(g: Poly) -> list[Poly]:
    seq = [g, g.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def sign_changes(seq: list[Poly], x: Fraction) -> int:
    signs = [v > 0 for v in (s(x) for s in seq) if v != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def cauchy_bound(p: Poly) -> Fraction:
    """Every complex root of ``p`` has modulus strictly below this."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_positive_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct roots of ``p`` in ``(0, inf)``.

    Returns sorted, disjoint ``(lo, hi)`` pairs.  ``lo == hi`` means the
    root is exactly ``lo``.  Otherwise the root lies strictly inside and
    neither endpoint is a root.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    g = squarefree_part(p)
    if g.degree == 0:
        return []
    seq = sturm_sequence(g)

    def count(a: Fraction, b: Fraction) -> int:
        # distinct roots in (a, b]
        return sign_changes(seq, a) - sign_changes(seq, b)

    out = []
    stack = [(Fraction(0), cauchy_bound(g))]
    while stack:
        lo, hi = stack.pop()
        c = count(lo, hi)
        if c == 0:
            continue
        if c > 1:
            mid = (lo + hi) / 2
            stack.append((mid, hi))
            stack.append((lo, mid))
            continue
        if g(hi) == 0:
            out.append((hi, hi))
            continue
        # push lo off a root (0 or the previous interval's exact root)
        while g(lo) == 0:
            mid = (lo + hi) / 2
            if g(mid) == 0:
                lo = hi = mid
                break
            if count(mid, hi) == 1:
                lo = mid
            else:
                hi = mid
        out.append((lo, hi))
    out.sort()
    return out


def halfline_sample_points(p: Poly) -> list[Fraction]:
    """Rational points in ``[0, inf)`` hitting every sign region of ``p``.

    Includes 0, a point in each gap between consecutive positive roots,
    the isolating endpoints, and the Cauchy bound (past the last root).
    """
    intervals = isolate_positive_roots(p)
    points = {Fraction(0), cauchy_bound(squarefree_part(p))}
    prev_hi = Fraction(0)
    for lo, hi in intervals:
        points.add((prev_hi + lo) / 2)
        if lo != hi:
            points.update((lo, hi))
        prev_hi = hi
    return sorted(points)
