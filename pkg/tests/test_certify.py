import random

import pytest

from conftest import random_poly
from holext.boundary import (
    BPoly2,
    Z1,
    Z1BAR,
    Z2,
    Z2BAR,
    is_holomorphic,
    normal_form,
    normal_monomials,
    random_sphere_points,
)
from holext.certify import Extends, Obstructed, cascade, certify, leading_asymptotic, scaling_limit
from holext.exact import GComplex
from holext.moments import moment_symbolic, moments_vanish
from oracles import scaled_limit_modes


def test_leading_asymptotic_examples():
    la = leading_asymptotic(Z1 * Z1BAR, 0)
    assert (la.l_o, la.modes) == (2, {0: -1})
    la = leading_asymptotic(Z1BAR**2, 1)
    assert (la.l_o, la.modes) == (2, {-2: 1})
    la = leading_asymptotic(Z1 * Z1BAR + Z1**3, 0)
    assert (la.l_o, la.modes) == (2, {0: -1})
    with pytest.raises(ValueError):
        leading_asymptotic(Z1**2 + Z1BAR, 1)


def test_cascade_examples():
    cert = cascade(Z1**2 + Z2)
    assert isinstance(cert, Extends) and cert.extension == Z1**2 + Z2
    assert cascade(Z1 * Z1BAR) == Obstructed(2, 1, 0, 0, GComplex(-1), "cascade")
    cert = cascade(Z1BAR**3 + Z1 * Z1BAR)
    assert (cert.l_o, cert.k_o, cert.N, cert.coefficient) == (2, 1, 0, -1)
    with pytest.raises(ValueError):
        cascade(Z2BAR)


def test_cascade_uses_pole_coordinates():
    # conj(z1) z2 = conj(z1) + conj(z1) (z2 - 1): the leading level is 1, not 3
    cert = cascade(Z1BAR * Z2)
    assert (cert.l_o, cert.k_o, cert.N, cert.frequency, cert.coefficient) == (1, 1, 0, -1, 1)
    assert scaled_limit_modes(Z1BAR * Z2, 0, 1) == {-1: 1}


def test_certify_examples():
    cert = certify(Z2 * Z2BAR + Z1 * Z1BAR)
    assert isinstance(cert, Extends) and cert.extension == 1
    assert isinstance(certify(Z1 * Z1BAR), Obstructed)
    cert = certify(Z2BAR)
    assert isinstance(cert, Obstructed) and cert.N == 0 and cert.route == "moment"
    assert (cert.l_o, cert.frequency, cert.coefficient) == (2, 0, 1)


def test_replay_mode_terminates_and_strips_antiholomorphic_terms():
    rng = random.Random(31)
    for _ in range(40):
        f = random_poly(rng, 6, terms=5)
        f = BPoly2({m: c for m, c in f.items() if m.p == 0})
        cert = cascade(f, assume_moments_vanish=True)
        assert isinstance(cert, Extends)
        assert is_holomorphic(cert.extension)
        anti = sum(1 for m in f.keys() if m.k)
        # each step removes at least one antiholomorphic coefficient in pole coordinates
        assert all(step.killed for step in cert.steps)
        if anti == 0:
            assert cert.steps == () and cert.extension == f
        else:
            assert cert.steps
        assert cert.extension == BPoly2({m: c for m, c in f.items() if m.k == 0})


def test_certificate_validity_and_soundness():
    rng = random.Random(32)
    points = random_sphere_points(2, 30, seed=2)
    for _ in range(60):
        f = random_poly(rng, 6, terms=rng.randint(1, 4), normal=False)
        if rng.random() < 0.4:
            f = BPoly2({m: c for m, c in f.items() if m.k == 0 and m.p == 0}) + Z2 * Z2BAR * 2
        cert = certify(f)
        g = normal_form(f)
        assert isinstance(cert, Extends) == moments_vanish(g)
        if isinstance(cert, Extends):
            assert is_holomorphic(cert.extension)
            for z1, z2 in points:
                assert cert.extension.evaluate(z1, z2) == f.evaluate(z1, z2)
        else:
            assert cert.N == cert.k_o - 1 and cert.coefficient


def test_witness_reproduced_by_symbolic_limit():
    for mono in normal_monomials(4):
        f = BPoly2({mono: 1}) + Z1**2
        cert = certify(f)
        if isinstance(cert, Extends):
            continue
        q = moment_symbolic(normal_form(f), cert.N)
        asym = scaling_limit(q, max(m.weight for m in normal_form(f).keys()))
        assert asym.l_o == cert.l_o
        assert asym.modes[cert.frequency] == cert.coefficient


def test_frequency_injectivity():
    for l_o in range(1, 9):
        for k_o in range(1, l_o + 1):
            hs = [h for h in range(l_o + 1) for m in range(l_o + 1) if h + k_o + 2 * m == l_o]
            assert len({h - k_o for h in hs}) == len(hs)
