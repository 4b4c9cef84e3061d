import random
from fractions import Fraction

import pytest

from conftest import random_poly_nd
from holext.boundary import BPolyN, Z1, Z1BAR, Z2, random_sphere_points
from holext.certify import Extends, Obstructed
from holext.exact import GComplex
from holext.slicer import SlicePlane, certify_nd, slice_certify_all, slice_restrict, standard_planes


def z(i, conj=False, n=3):
    return BPolyN.var(n, i, conj)


def test_slice_plane_validation():
    SlicePlane((GComplex(Fraction(3, 5)), GComplex(0, Fraction(4, 5)), GComplex()))
    with pytest.raises(ValueError):
        SlicePlane((GComplex(1), GComplex(1), GComplex()))
    with pytest.raises(ValueError):
        SlicePlane((GComplex(), GComplex(), GComplex(1)))


def test_slice_restrict_examples():
    P = SlicePlane((GComplex(Fraction(3, 5)), GComplex(0, Fraction(4, 5)), GComplex()))
    assert slice_restrict(z(3), P) == Z2
    assert slice_restrict(z(1), P) == Z1 * Fraction(3, 5)
    assert slice_restrict(z(1) * z(1, True), SlicePlane.axis(3, 1)) == Z1 * Z1BAR


def test_slice_restrict_commutes_with_evaluation():
    rng = random.Random(41)
    planes = standard_planes(3)
    slice_points = random_sphere_points(2, 20, seed=3)
    for _ in range(10):
        F = random_poly_nd(rng, 3, 4, terms=4)
        P = rng.choice(planes)
        f = slice_restrict(F, P)
        for zeta1, zeta2 in slice_points:
            point = [zeta1 * P.v[0], zeta1 * P.v[1], zeta2]
            assert sum(x.abs2() for x in point) == 1
            assert F.evaluate(point) == f.evaluate(zeta1, zeta2)


def test_standard_planes_are_exact_units():
    planes = standard_planes(4, 12)
    assert len({P.v for P in planes}) == 12
    for P in planes:
        assert sum(x.abs2() for x in P.v) == 1 and not P.v[-1]


def test_slice_certify_all_examples():
    rep = slice_certify_all(z(1) * z(2) + z(3) ** 3, standard_planes(3))
    assert rep.all_extend and rep.glued and rep.common_line == Z2**3
    rep = slice_certify_all(z(1) * z(1, True), standard_planes(3))
    assert isinstance(rep.certificates[0], Obstructed)
    assert rep.glued is None
    rep = slice_certify_all(z(1) ** 2 - z(2) * z(3), standard_planes(3, 5))
    assert rep.all_extend and rep.glued


def test_certify_nd_examples():
    cert = certify_nd(z(1) * z(1, True) + z(2) * z(2, True) + z(3) * z(3, True))
    assert isinstance(cert, Extends) and cert.extension == BPolyN.const(3, 1)
    cert = certify_nd(z(1, True))
    assert isinstance(cert, Obstructed) and cert.detail["plane_index"] == 0
    assert isinstance(certify_nd(z(1) * z(2) * z(3)), Extends)


def test_certify_nd_in_dimension_four():
    F = BPolyN.var(4, 2) * BPolyN.var(4, 4, True) * BPolyN.var(4, 4)
    cert = certify_nd(F)
    assert isinstance(cert, Obstructed)


def test_gluing_whenever_all_slices_extend():
    rng = random.Random(42)
    for _ in range(15):
        F = random_poly_nd(rng, 3, 4, terms=3)
        F = BPolyN(3, {k: c for k, c in F.items() if not any(k[1])})
        rep = slice_certify_all(F, standard_planes(3))
        assert rep.all_extend and rep.glued
        P = SlicePlane((rand_unit(rng), GComplex(), GComplex()))
        assert slice_certify_all(F, [P]).glued


def rand_unit(rng):
    t = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return GComplex((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))
