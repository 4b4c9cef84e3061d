"""Independent oracles shared by the unit and acceptance tests."""

from fractions import Fraction

import sympy

from holext.boundary import normal_form
from holext.exact import GComplex
from holext.moments import moment_symbolic

_t = sympy.symbols("t", positive=True)


def _sym(c: GComplex):
    return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
        c.im.numerator, c.im.denominator
    )


def _gc(x) -> GComplex:
    x = sympy.nsimplify(x)
    re, im = sympy.re(x), sympy.im(x)
    return GComplex(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def scaled_limit_modes(f, N: int, l_o: int) -> dict[int, GComplex]:
    """lim_{t->oo} t^l_o * mu(t e^{i theta}, N), per Fourier frequency, via sympy.limit.

    Substitutes alpha = t e^{i theta}, alpha_bar = t e^{-i theta} in the cleared
    moment, so alpha^p alpha_bar^q contributes t^(p+q) at frequency p - q.
    Raises if any frequency diverges.
    """
    g = normal_form(f)
    L = max(m.weight for m in g.keys())
    q = moment_symbolic(g, N)
    by_freq: dict[int, object] = {}
    for (p, r), c in q.items():
        by_freq[p - r] = by_freq.get(p - r, 0) + _sym(c) * _t ** (p + r)
    modes = {}
    for d, poly in by_freq.items():
        lim = sympy.limit(_t**l_o * poly / (1 + _t**2) ** L, _t, sympy.oo)
        if not lim.is_finite:
            raise AssertionError(f"frequency {d} diverges at order t^{l_o}")
        modes[d] = _gc(lim)
    return modes
