import random

import numpy as np
import pytest

from conftest import rand_gauss, random_poly
from holext.boundary import BPoly2, Z1, Z1BAR, Z2, Z2BAR
from holext.moments import moment
from holext.numeric import (
    InsufficientNodes,
    QuadConfig,
    default_nodes,
    disc_fourier_test,
    interior_center_demo,
    moment_quad,
)


@pytest.mark.parametrize(
    "f, a, N, expected",
    [
        (Z1 * Z1BAR, 1, 0, -0.25),
        (Z1**2, 3 - 2j, 0, 0.0),
        (Z2BAR, 1, 0, 0.5),
    ],
)
def test_moment_quad_examples(f, a, N, expected):
    assert abs(moment_quad(f, a, N, QuadConfig(64)) - expected) <= 1e-12


def test_node_precondition():
    with pytest.raises(InsufficientNodes):
        moment_quad(Z1**5 * Z1BAR, 1, 2, QuadConfig(18))
    moment_quad(Z1**5 * Z1BAR, 1, 2, QuadConfig(19))


def test_default_nodes_from_environment(monkeypatch):
    monkeypatch.setenv("HOLEXT_NODES", "33")
    assert default_nodes() == 33
    monkeypatch.delenv("HOLEXT_NODES")
    assert default_nodes() == 257


def test_disc_fourier_examples():
    cfg = QuadConfig(64)
    for a in (1, 0.3 - 2j, 4j):
        assert disc_fourier_test(Z1**3 + 2 * Z2 * Z1, a, cfg) <= 1e-12
    assert abs(disc_fourier_test(Z1 * Z1BAR, 1, cfg) - 0.25) <= 1e-12
    assert abs(disc_fourier_test(Z1 + Z1BAR, 1, cfg) - 0.5) <= 1e-12
    assert disc_fourier_test(Z1 * Z1BAR, 1, cfg) >= 1e-3


def test_trapezoid_exactness_under_doubling():
    rng = random.Random(51)
    for _ in range(20):
        f = random_poly(rng, 8, terms=4)
        a = complex(rand_gauss(rng, 4))
        N = rng.randint(0, 4)
        one = moment_quad(f, a, N, QuadConfig(129))
        two = moment_quad(f, a, N, QuadConfig(258))
        assert abs(one - two) <= 1e-13


def test_exact_numeric_agreement():
    rng = random.Random(52)
    for _ in range(30):
        f = random_poly(rng, 8, terms=4)
        a = rand_gauss(rng, 4)
        N = rng.randint(0, 4)
        assert abs(moment_quad(f, complex(a), N, QuadConfig(257)) - complex(moment(f, a, N))) <= 1e-10


def test_interior_center_demo():
    rep = interior_center_demo(lines=20)
    rows = rep["lines_through_origin"]
    assert len(rows) == 20 and rep["all_lines_extend"]
    assert rows[0]["restriction"] == pytest.approx(1.0, abs=1e-12)
    assert rows[1]["restriction"] == pytest.approx(9 / 25, abs=1e-12)
    assert rep["disc_through_pole"]["mu"] == "-1/4"
    assert rep["certificate"].status == "obstructed"
