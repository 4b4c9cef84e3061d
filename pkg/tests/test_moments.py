import random
from fractions import Fraction

import pytest
import sympy

from conftest import rand_gauss, random_poly
from holext.boundary import BPoly2, Z1, Z1BAR, Z2, Z2BAR, is_holomorphic, normal_form, normal_monomials
from holext.exact import GComplex, ParamPoly
from holext.moments import (
    moment,
    moment_cutoff,
    moment_symbolic,
    moment_symbolic_via_pullback,
    moments_vanish,
    monomial_moment,
    monomial_moment_bruteforce,
)


def _sympy_moment(f: BPoly2, a: GComplex, N: int) -> GComplex:
    """Residue at 0 of tau^N f(D_a(tau)) computed by sympy from scratch."""
    tau = sympy.symbols("tau")
    A = sympy.Rational(a.re.numerator, a.re.denominator) + sympy.I * sympy.Rational(a.im.numerator, a.im.denominator)
    Ab = sympy.conjugate(A)
    c = 1 / (1 + A * Ab)
    z1, z2 = c * (tau - 1) * A, c * (tau - 1) + 1
    z1b, z2b = c * (1 / tau - 1) * Ab, c * (1 / tau - 1) + 1
    expr = 0
    for (h, k, m, p), b in f.items():
        bb = sympy.Rational(b.re.numerator, b.re.denominator) + sympy.I * sympy.Rational(b.im.numerator, b.im.denominator)
        expr += bb * z1**h * z1b**k * z2**m * z2b**p
    r = sympy.nsimplify(sympy.expand(sympy.residue(tau**N * expr, tau, 0)))
    re, im = sympy.re(r), sympy.im(r)
    return GComplex(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def test_moment_examples():
    a = GComplex(Fraction(3, 7), 2)
    for N in range(4):
        assert moment(Z1**2 * Z2, a, N) == 0
    assert moment(Z1 * Z1BAR, 1, 0) == Fraction(-1, 4)
    assert moment(Z2BAR, 1, 0) == Fraction(1, 2)


def test_moment_against_sympy_residue():
    rng = random.Random(12)
    for _ in range(8):
        f = random_poly(rng, 4, terms=3, normal=False)
        a = rand_gauss(rng)
        N = rng.randint(0, 2)
        assert moment(f, a, N) == _sympy_moment(f, a, N)


def test_monomial_moment_examples():
    assert monomial_moment(1, 1, 0, 0) == -1
    assert monomial_moment(0, 2, 0, 0) == -2
    assert monomial_moment(0, 2, 0, 1) == 1
    for N in range(5):
        for k in range(N + 1):
            assert monomial_moment(3, k, 2, N) == 0


def test_monomial_moment_matches_bruteforce():
    for h in range(7):
        for k in range(7):
            for m in range(7):
                for N in range(7):
                    assert monomial_moment(h, k, m, N) == monomial_moment_bruteforce(h, k, m, N)


def test_moment_symbolic_examples():
    assert moment_symbolic(Z1 * Z1BAR, 0) == ParamPoly({(1, 1): -1})
    # +alpha_bar: the residue of alpha_bar (1/tau - 1) is +alpha_bar
    assert moment_symbolic(Z1BAR, 0) == ParamPoly({(0, 1): 1})
    for N in range(4):
        assert moment_symbolic(Z1**3 + Z2 * Z1, N).is_zero()


def test_moment_symbolic_consistent_with_concrete():
    rng = random.Random(13)
    for _ in range(50):
        f = random_poly(rng, 6)
        L = max(m.weight for m in f.keys())
        a = rand_gauss(rng)
        N = rng.randint(0, 4)
        q = moment_symbolic(f, N)
        assert q == moment_symbolic_via_pullback(f, N)
        assert q.evaluate(a) / (1 + a.abs2()) ** L == moment(f, a, N)


def test_truncation_bound():
    for mono in normal_monomials(6):
        for N in range(mono.k + mono.p, 8):
            # route through the pullback so the shortcut in moment_symbolic is not what is tested
            assert moment_symbolic_via_pullback(BPoly2({mono: 1}), N).is_zero()


def test_moments_vanish_examples():
    assert moments_vanish(Z1**3 + 2 * Z2)
    assert not moments_vanish(Z1 * Z1BAR)
    g = normal_form(Z2 * Z2BAR)
    assert g == 1 - Z1 * Z1BAR
    assert not moments_vanish(g)
    assert moment_symbolic(g, 0) == ParamPoly({(1, 1): 1})
    assert moment_cutoff(Z1 * Z1BAR**2 + Z2BAR) == 2


def test_moments_vanish_matches_holomorphy_on_basis():
    for mono in normal_monomials(6):
        f = BPoly2({mono: 1})
        assert moments_vanish(f) == is_holomorphic(f)


def test_moments_vanish_rejects_non_normal():
    with pytest.raises(ValueError):
        moments_vanish(Z2 * Z2BAR)
