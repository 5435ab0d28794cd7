import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polypreserve.poly import (
    Poly,
    ResidueDecomposition,
    poly_add,
    poly_compose,
    poly_derivative,
    poly_eval,
    poly_gcd,
    poly_mul,
    residue_decompose,
    residue_index_set,
    residue_part,
    roots_of_unity_part,
    squarefree_part,
)

from conftest import nonneg_fractions, polys

X = Poly.x()


def test_canonical_form_trims_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0]).is_zero()
    assert Poly([0]).degree is None
    assert Poly([]) == Poly.zero()
    assert Poly(["1/2", 3]).coeffs == (Fraction(1, 2), 3)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly([0.5])


def test_add(paper_poly):
    assert poly_add(paper_poly, Poly([0, 4])) == Poly([4, 0, 1])
    assert paper_poly + Poly.zero() == paper_poly
    assert poly_add(Poly([-1, 1]), Poly([1, -1])).is_zero()


def test_mul(paper_poly):
    assert poly_mul(Poly([-2, 1]), Poly([-2, 1])) == paper_poly
    assert paper_poly * Poly.constant(1) == paper_poly
    assert (paper_poly * Poly.zero()).is_zero()
    assert 3 * X == Poly([0, 3])


def test_compose(paper_poly):
    assert poly_compose(Poly.monomial(2), Poly([1, 1])) == Poly([1, 2, 1])
    assert poly_compose(paper_poly, X) == paper_poly
    assert poly_compose(paper_poly, Poly([2, 1])) == Poly.monomial(2)


def test_derivative(paper_poly):
    assert poly_derivative(paper_poly, 1) == Poly([-4, 2])
    assert poly_derivative(paper_poly, 0) == paper_poly
    assert poly_derivative(Poly.monomial(2), 3).is_zero()


def test_eval(paper_poly):
    assert poly_eval(paper_poly, Fraction(2)) == 0
    assert poly_eval(Poly([7, 1, 1]), Fraction(0)) == 7
    assert poly_eval(paper_poly, Fraction(1)) == 1
    assert Poly.zero()(Fraction(3)) == 0


def test_divmod_and_gcd():
    p = Poly([-1, 0, 1])  # (x-1)(x+1)
    q, r = divmod(p, Poly([-1, 1]))
    assert q == Poly([1, 1]) and r.is_zero()
    assert poly_gcd(Poly([4, -4, 1]), Poly([-4, 2])) == Poly([-2, 1])
    assert squarefree_part(Poly([4, -4, 1])) == Poly([-2, 1])


def test_str():
    assert str(Poly([4, -4, 1])) == "x^2 - 4*x + 4"
    assert str(Poly.zero()) == "0"


def test_parse_and_json_round_trip():
    p = Poly.parse("4/1, -4 ,1/1")
    assert p == Poly([4, -4, 1])
    assert p.to_json() == ["4/1", "-4/1", "1/1"]
    assert Poly.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        Poly.parse("1,,2")
    with pytest.raises(ValueError):
        Poly.parse("1/0")


def test_residue_index_set():
    assert residue_index_set(7, 3, 1) == [1, 4, 7]
    assert residue_index_set(0, 3, 2) == []
    with pytest.raises(ValueError):
        residue_index_set(5, 3, 3)


def test_residue_part(paper_poly):
    p = Poly([1, 2, 3, 4, 5])
    assert residue_part(p, 3, 1) == Poly([0, 2, 0, 0, 5])
    assert residue_part(p, 1, 0) == p
    assert residue_part(paper_poly, 2, 1) == Poly([0, -4])
    with pytest.raises(ValueError):
        residue_part(p, 3, 3)
    with pytest.raises(ValueError):
        residue_part(p, 0, 0)


def test_residue_decompose(paper_poly):
    assert residue_decompose(paper_poly, 2).parts == (Poly([4, 0, 1]), Poly([0, -4]))
    assert residue_decompose(Poly.zero(), 4).parts == (Poly.zero(),) * 4
    assert residue_decompose(Poly.monomial(5), 3).parts == (
        Poly.zero(), Poly.zero(), Poly.monomial(5))


def test_decomposition_json_round_trip(paper_poly):
    dec = residue_decompose(paper_poly, 3)
    assert ResidueDecomposition.from_json(dec.to_json()) == dec


def test_roots_of_unity_part_examples(paper_poly):
    assert roots_of_unity_part(paper_poly, 2, 0, 1) == pytest.approx(5)
    p = Poly([3, -1, 2])
    assert roots_of_unity_part(p, 1, 0, 0.7 + 0.2j) == pytest.approx(p(0.7 + 0.2j))


@given(polys(), st.integers(1, 8))
def test_parts_partition_polynomial(p, n):
    dec = residue_decompose(p, n)
    assert dec.total() == p
    for r, part in enumerate(dec.parts):
        assert part == residue_part(p, n, r)
        assert all(k % n == r for k, c in enumerate(part.coeffs) if c)


@given(polys())
def test_even_odd_parts(p):
    # classical p_e(x) = (p(x) + p(-x))/2, p_o(x) = (p(x) - p(-x))/2
    minus = p.compose(-X)
    assert residue_part(p, 2, 0) == (p + minus) * Fraction(1, 2)
    assert residue_part(p, 2, 1) == (p - minus) * Fraction(1, 2)


@settings(max_examples=60)
@given(
    polys(),
    st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))),
    st.floats(0, 2),
    st.floats(0, 2 * cmath.pi),
)
def test_roots_of_unity_equivalence(p, nr, radius, angle):
    n, r = nr
    x = cmath.rect(radius, angle)
    assert abs(roots_of_unity_part(p, n, r, x) - residue_part(p, n, r)(x)) <= 1e-8


@given(polys(elements=nonneg_fractions, max_deg=5), polys(elements=nonneg_fractions, max_deg=4))
def test_closure_of_nonnegative_coefficients(p, q):
    for result in (p + q, p * q, p.compose(q), 3 * p):
        assert result.has_nonnegative_coefficients()


@given(polys(max_deg=6), polys(max_deg=3), st.integers(-5, 5))
def test_compose_matches_pointwise(p, q, x):
    x = Fraction(x, 3)
    assert p.compose(q)(x) == p(q(x))


@given(polys(max_deg=8), st.integers(0, 9))
def test_derivative_degree(p, k):
    d = p.derivative(k)
    if p.degree is None or k > p.degree:
        assert d.is_zero()
    else:
        assert d.degree == p.degree - k
