"""Straight analytic discs through the pole z_o = (0, 1) of the sphere in C^2.

For a parameter ``a`` the disc is::

    D_a(tau) = (c (tau - 1) a,  c (tau - 1) + 1),    c = 1 / (1 + |a|^2)

with ``tau`` in the closed unit disc.  ``D_a(1) = z_o`` and ``D_a`` maps the
unit circle into the sphere.  As ``|a|`` grows the disc shrinks towards the
complex tangent line at ``z_o``: ``|D_a(tau) - z_o|^2 <= 4 / (1 + |a|^2)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .boundary import BPoly2, weighted_degree
from .exact import CircPoly, GComplex, ParamPoly, as_gcomplex

__all__ = [
    "circle_point",
    "disc_eval",
    "disc_pullback",
    "disc_pullback_symbolic",
    "sphere_defect_symbolic",
    "monomial_numerator",
]


def circle_point(t) -> GComplex:
    """Exact point ``((1 - t^2) + 2ti) / (1 + t^2)`` of the unit circle, ``t`` rational."""
    t = Fraction(t)
    d = 1 + t * t
    return GComplex((1 - t * t) / d, 2 * t / d)


def disc_eval(a, tau) -> tuple[GComplex, GComplex]:
    a, tau = as_gcomplex(a), as_gcomplex(tau)
    if tau.abs2() != 1:
        raise ValueError(f"tau = {tau} is not on the unit circle")
    c = Fraction(1) / (1 + a.abs2())
    u = (tau - 1) * c
    return (u * a, u + 1)


def _coordinate_pullbacks(a) -> tuple[CircPoly, CircPoly, CircPoly, CircPoly]:
    a = as_gcomplex(a)
    c = Fraction(1) / (1 + a.abs2())
    u = CircPoly({1: c, 0: -c})          # c (tau - 1)
    ubar = CircPoly({-1: c, 0: -c})      # c (1/tau - 1)
    return (u.scale(a), ubar.scale(a.conj()), u + 1, ubar + 1)


def disc_pullback(f: BPoly2, a) -> CircPoly:
    """``f`` restricted to the boundary circle of ``D_a``, as a Laurent polynomial in tau."""
    z1, z1b, z2, z2b = _coordinate_pullbacks(a)
    cache: dict[tuple[int, int], CircPoly] = {}

    def power(i: int, e: int) -> CircPoly:
        if (i, e) not in cache:
            cache[(i, e)] = (z1, z1b, z2, z2b)[i] ** e
        return cache[(i, e)]

    out = CircPoly()
    for (h, k, m, p), coeff in f.items():
        term = CircPoly({0: coeff})
        for i, e in enumerate((h, k, m, p)):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


# Symbolic discs.  Keys are (tau exponent, alpha exponent, alpha_bar exponent)
# and coefficients are plain ints: the numerators below are integral.
_S = {(0, 0, 0): 1, (0, 1, 1): 1}                    # s = 1 + alpha alpha_bar
_NUMERATORS = (
    {(1, 1, 0): 1, (0, 1, 0): -1},                   # s z1      = alpha (tau - 1)
    {(-1, 0, 1): 1, (0, 0, 1): -1},                  # s conj z1 = alpha_bar (1/tau - 1)
    {(1, 0, 0): 1, (0, 1, 1): 1},                    # s z2      = tau + alpha alpha_bar
    {(-1, 0, 0): 1, (0, 1, 1): 1},                   # s conj z2 = 1/tau + alpha alpha_bar
)


def _imul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (e1, p1, q1), c1 in a.items():
        for (e2, p2, q2), c2 in b.items():
            key = (e1 + e2, p1 + p2, q1 + q2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def _ipow(which: int, e: int) -> dict:
    base = _S if which < 0 else _NUMERATORS[which]
    if e == 0:
        return {(0, 0, 0): 1}
    return _imul(_ipow(which, e - 1), base)


@lru_cache(maxsize=None)
def monomial_numerator(h: int, k: int, m: int, p: int, L: int) -> dict[int, dict[tuple[int, int], int]]:
    """``s^L * (monomial o D_a)`` grouped by tau exponent, integer coefficients in (alpha, alpha_bar).

    Requires ``L >= h + k + m + p`` (each coordinate carries one factor 1/s).
    """
    extra = L - (h + k + m + p)
    if extra < 0:
        raise ValueError("clearing power L too small for this monomial")
    poly = {(0, 0, 0): 1}
    for which, e in ((0, h), (1, k), (2, m), (3, p), (-1, extra)):
        if e:
            poly = _imul(poly, _ipow(which, e))
    grouped: dict[int, dict[tuple[int, int], int]] = {}
    for (e, pa, qa), c in poly.items():
        grouped.setdefault(e, {})[(pa, qa)] = c
    return grouped


def disc_pullback_symbolic(f: BPoly2) -> tuple[dict[int, ParamPoly], int]:
    """Pullback with the disc parameter kept formal.

    Returns ``(numerator, L)`` with ``(1 + alpha alpha_bar)^L * (f o D_a)``
    equal to ``sum_e numerator[e] * tau^e``; ``L`` is the weighted degree of
    ``f`` (0 for the zero polynomial).
    """
    if not f:
        return {}, 0
    L = weighted_degree(f)
    acc: dict[int, dict] = {}
    for mono, coeff in f.items():
        for e, pq in monomial_numerator(*mono, L).items():
            slot = acc.setdefault(e, {})
            for key, c in pq.items():
                slot[key] = slot.get(key, 0) + coeff * c
    out = {}
    for e, pq in acc.items():
        poly = ParamPoly(pq)
        if poly:
            out[e] = poly
    return out, L


def sphere_defect_symbolic() -> dict[tuple[int, int, int], int]:
    """``s^2 (|z1|^2 + |z2|^2 - 1)`` along ``D_a``, with tau, alpha, alpha_bar formal.

    The disc boundary lies on the sphere exactly when this is the zero map.
    """
    z1, z1b, z2, z2b = _NUMERATORS
    total = _imul(z1, z1b)
    for key, c in _imul(z2, z2b).items():
        total[key] = total.get(key, 0) + c
    for key, c in _imul(_S, _S).items():
        total[key] = total.get(key, 0) - c
    return {k: c for k, c in total.items() if c}

