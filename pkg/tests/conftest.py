import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from polypreserve.poly import Poly

fractions = st.builds(
    Fraction, st.integers(-100, 100), st.integers(1, 100)
)


@st.composite
def polys(draw, max_deg=12, elements=fractions):
    return Poly(draw(st.lists(elements, max_size=max_deg + 1)))


nonneg_fractions = st.builds(Fraction, st.integers(0, 50), st.integers(1, 20))


def random_poly(rng: random.Random, max_deg: int, bound: int = 100, min_deg: int = 0) -> Poly:
    deg = rng.randint(min_deg, max_deg)
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg + 1)]
    while coeffs[-1] == 0:
        coeffs[-1] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return Poly(coeffs)


@pytest.fixture
def rng():
    return random.Random(20211019)


@pytest.fixture
def paper_poly():
    # (x - 2)^2
    return Poly([4, -4, 1])
