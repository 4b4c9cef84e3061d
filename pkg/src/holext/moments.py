"""N-moments of boundary data along the discs through the pole.

The N-moment of ``f`` on ``D_a`` is ``G(a, N) = integral over |tau| = 1 of
tau^N f(D_a(tau)) dtau``.  Everything here returns ``mu`` with
``G = 2*pi*i * mu``, i.e. the residue of ``tau^N f(D_a(tau))``.

Single monomials have a closed form.  On the circle
``conj(tau) - 1 = -(tau - 1) / tau``, so with ``n = h + k + m``::

    residue of tau^N (tau - 1)^(h+m) (conj(tau) - 1)^k
        = (-1)^(h+k+m+N+1) * C(n, k - N - 1)

which vanishes unless ``k > N``.  :func:`monomial_moment_bruteforce`
recomputes the same number by expanding both binomials term by term.
"""

from __future__ import annotations

from math import comb

from .boundary import BPoly2, NotNormalFormError, is_normal, weighted_degree
from .discs import disc_pullback, disc_pullback_symbolic, monomial_numerator
from .exact import GComplex, ParamPoly, circ_reduce, param_is_zero, residue

__all__ = [
    "moment",
    "monomial_moment",
    "monomial_moment_bruteforce",
    "moment_symbolic",
    "moment_cutoff",
    "moments_vanish",
]


def moment(f: BPoly2, a, N: int) -> GComplex:
    """Exact ``mu`` with ``G(a, N) = 2*pi*i * mu``."""
    if N < 0:
        raise ValueError("moment order N must be nonnegative")
    return residue(disc_pullback(f, a).shift(N))


def monomial_moment(h: int, k: int, m: int, N: int) -> int:
    """Residue of ``tau^N (tau - 1)^(h+m) (conj(tau) - 1)^k`` in closed form."""
    j = k - N - 1
    n = h + k + m
    if j < 0:
        return 0
    sign = -1 if (n + N + 1) % 2 else 1
    return sign * comb(n, j)


def monomial_moment_bruteforce(h: int, k: int, m: int, N: int) -> GComplex:
    """Same residue by full binomial expansion and reduction on the circle."""
    terms = []
    for i in range(h + m + 1):
        ci = comb(h + m, i) * (-1) ** (h + m - i)
        for j in range(k + 1):
            cj = comb(k, j) * (-1) ** (k - j)
            terms.append((N + i, j, ci * cj))
    return residue(circ_reduce(terms))


def moment_symbolic(f: BPoly2, N: int) -> ParamPoly:
    """``(1 + alpha alpha_bar)^L * mu(a, N)`` as a polynomial in (alpha, alpha_bar).

    ``L`` is the weighted degree of ``f``; divide an evaluation at ``a`` by
    ``(1 + |a|^2)^L`` to recover :func:`moment`.
    """
    if N < 0:
        raise ValueError("moment order N must be nonnegative")
    if not f:
        return ParamPoly()
    L = weighted_degree(f)
    target = -N - 1
    acc: dict = {}
    for mono, coeff in f.items():
        # a monomial's pullback has tau exponents >= -(k + p)
        if mono.k + mono.p <= N:
            continue
        pq = monomial_numerator(*mono, L).get(target)
        if not pq:
            continue
        for key, c in pq.items():
            acc[key] = acc.get(key, 0) + coeff * c
    return ParamPoly(acc)


def moment_symbolic_via_pullback(f: BPoly2, N: int) -> ParamPoly:
    numerator, _ = disc_pullback_symbolic(f)
    return numerator.get(-N - 1, ParamPoly())


def moment_cutoff(f: BPoly2) -> int:
    """``K = max(k + p)``: every moment of order ``N >= K`` vanishes identically."""
    return max((mono.k + mono.p for mono in f.keys()), default=0)


def moments_vanish(f: BPoly2) -> bool:
    """Decide whether ``G(a, N) = 0`` for every disc parameter ``a`` and every ``N >= 0``."""
    if not is_normal(f):
        raise NotNormalFormError("moments_vanish expects a polynomial in sphere normal form")
    return all(param_is_zero(moment_symbolic(f, N)) for N in range(moment_cutoff(f)))


def first_nonvanishing_moment(f: BPoly2) -> tuple[int, ParamPoly] | None:
    for N in range(moment_cutoff(f)):
        q = moment_symbolic(f, N)
        if q:
            return N, q
    return None
