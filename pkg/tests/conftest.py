import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from holext.boundary import BPoly2, BPolyN, normal_monomials, normal_monomials_nd
from holext.exact import GComplex


def rand_gauss(rng: random.Random, spread: int = 5) -> GComplex:
    return GComplex(
        Fraction(rng.randint(-spread, spread), rng.randint(1, spread)),
        Fraction(rng.randint(-spread, spread), rng.randint(1, spread)),
    )


def rand_nonzero_gauss(rng: random.Random, spread: int = 5) -> GComplex:
    while True:
        c = rand_gauss(rng, spread)
        if c:
            return c


def random_poly(rng: random.Random, max_weight: int, terms: int = 4, normal: bool = True) -> BPoly2:
    if normal:
        pool = normal_monomials(max_weight)
    else:
        pool = [
            (h, k, m, p)
            for h in range(max_weight + 1)
            for k in range(max_weight + 1)
            for m in range(max_weight // 2 + 1)
            for p in range(max_weight // 2 + 1)
            if h + k + 2 * m + 2 * p <= max_weight
        ]
    chosen = rng.sample(pool, min(terms, len(pool)))
    return BPoly2({mono: rand_nonzero_gauss(rng) for mono in chosen})


def random_poly_nd(rng: random.Random, n: int, max_weight: int, terms: int = 3) -> BPolyN:
    pool = normal_monomials_nd(n, max_weight)
    chosen = rng.sample(pool, min(terms, len(pool)))
    return BPolyN(n, {key: rand_nonzero_gauss(rng) for key in chosen})


fractions = st.fractions(min_value=-8, max_value=8, max_denominator=12)
gcomplex = st.builds(GComplex, fractions, fractions)


@pytest.fixture
def rng():
    return random.Random(20090)


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def record_acceptance(number: int, name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[number] = (name, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        name, passed, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {name}  {detail}")
