import random
from fractions import Fraction

import pytest

from polypreserve.matrix import (
    CirculantSpec,
    JordanSpec,
    MatrixQ,
    circulant_poly,
    circulant_realize,
    cyclic_shift,
    embed_diag,
    eval_on_jordan,
    eval_on_scaled_circulant,
    jordan_realize,
    mat_poly_eval,
    matrix_from_json,
)
from polypreserve.poly import Poly

from conftest import random_poly

SWAP = MatrixQ([[0, 1], [1, 0]])


def test_matrix_basics():
    A = MatrixQ([[1, -2], ["1/3", 0]])
    assert A.n == 2
    assert A.entry(1, 2) == -2
    assert not A.is_nonnegative()
    assert SWAP.is_nonnegative()
    assert A.min_entry() == ((1, 2), -2)
    with pytest.raises(IndexError):
        A.entry(3, 1)
    with pytest.raises(ValueError):
        MatrixQ([[1, 2]])


def test_mat_poly_eval(paper_poly):
    assert mat_poly_eval(paper_poly, SWAP) == MatrixQ([[5, -4], [-4, 5]])
    A = MatrixQ([[1, 2, 0], [0, 3, 1], [5, 0, 0]])
    assert mat_poly_eval(Poly.x(), A) == A
    assert mat_poly_eval(Poly.constant(7), A) == MatrixQ.identity(3, 7)
    assert mat_poly_eval(Poly.zero(), A) == MatrixQ.zeros(3)


def test_circulant_realize():
    assert circulant_realize(CirculantSpec([0, 1])) == SWAP
    assert circulant_realize(CirculantSpec([0, 1, 0])) == MatrixQ([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert cyclic_shift(3) == MatrixQ([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert circulant_realize(CirculantSpec([5, -4])) == MatrixQ([[5, -4], [-4, 5]])


def test_circulant_index_formula():
    v = [Fraction(k + 1) for k in range(5)]
    A = circulant_realize(CirculantSpec(v))
    for i in range(1, 6):
        for j in range(1, 6):
            assert A.entry(i, j) == v[(j - i) % 5]


def test_circulant_poly_identity():
    assert circulant_poly([0, 1, 1]) == Poly([0, 1, 1])
    assert circulant_poly([1, 0, 0]) == Poly.constant(1)
    assert mat_poly_eval(circulant_poly([0, 1, 1]), cyclic_shift(3)) == circulant_realize(
        CirculantSpec([0, 1, 1]))


def test_eval_on_scaled_circulant():
    p = Poly([4, -4, 1])
    assert eval_on_scaled_circulant(p, 2, 1) == MatrixQ([[5, -4], [-4, 5]])
    assert eval_on_scaled_circulant(Poly.monomial(3), 3, 2) == MatrixQ.identity(3, 8)
    q = Poly([1, 1, 0, -1, 1])
    assert eval_on_scaled_circulant(q, 2, 2) == MatrixQ([[17, -6], [-6, 17]])


def test_jordan():
    assert jordan_realize(JordanSpec(2, 0)) == MatrixQ([[0, 1], [0, 0]])
    assert jordan_realize(JordanSpec(1, 3)) == MatrixQ([[3]])
    assert jordan_realize(JordanSpec(3, 2)) == MatrixQ([[2, 1, 0], [0, 2, 1], [0, 0, 2]])
    with pytest.raises(ValueError):
        JordanSpec(0, 1)


def test_eval_on_jordan(paper_poly):
    assert eval_on_jordan(paper_poly, 2, 0) == MatrixQ([[4, -4], [0, 4]])
    assert eval_on_jordan(Poly.x(), 3, 5) == jordan_realize(JordanSpec(3, 5))


def test_embed_diag(paper_poly):
    assert embed_diag(SWAP) == MatrixQ([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert embed_diag(MatrixQ([[0]])) == MatrixQ.zeros(2)
    # p(diag(A, 0)) = diag(p(A), p(0))
    B = mat_poly_eval(paper_poly, embed_diag(SWAP))
    assert B == MatrixQ([[5, -4, 0], [-4, 5, 0], [0, 0, 4]])


def test_json_forms():
    A = MatrixQ([[1, "-1/2"], [0, 3]])
    assert A.to_json() == {"n": 2, "rows": [["1/1", "-1/2"], ["0/1", "3/1"]]}
    assert matrix_from_json(A.to_json()) == A
    assert matrix_from_json({"circ": ["5/1", "-4/1"]}) == MatrixQ([[5, -4], [-4, 5]])
    assert matrix_from_json({"jordan": {"n": 2, "lambda": "0/1"}}) == MatrixQ([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        matrix_from_json({"n": 3, "rows": [["1", "0"], ["0", "1"]]})


def test_from_float_truncates_toward_zero():
    W = MatrixQ.from_float([[0.1234567, 1.0], [0.0, 2.5]])
    assert W.entry(1, 1) == Fraction(123456, 10**6)
    assert W.is_nonnegative()


def test_shift_power_reduction():
    for n in range(1, 7):
        C = cyclic_shift(n)
        P = MatrixQ.identity(n)
        powers = [P]
        for _ in range(20):
            P = P @ C
            powers.append(P)
        for k in range(21):
            assert powers[k] == powers[k % n]


@pytest.mark.parametrize("seed", range(4))
def test_ring_homomorphism(seed):
    rng = random.Random(seed)
    for _ in range(10):
        p, q = random_poly(rng, 5, 9), random_poly(rng, 5, 9)
        n = rng.randint(1, 4)
        A = MatrixQ([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
                     for _ in range(n)])
        assert mat_poly_eval(p + q, A) == mat_poly_eval(p, A) + mat_poly_eval(q, A)
        assert mat_poly_eval(p * q, A) == mat_poly_eval(p, A) @ mat_poly_eval(q, A)
        assert mat_poly_eval(p.compose(q), A) == mat_poly_eval(p, mat_poly_eval(q, A))
