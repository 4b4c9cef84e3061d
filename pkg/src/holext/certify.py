"""Holomorphic-extension certificates for boundary polynomials on the sphere in C^2.

The decision replays the coefficient-killing argument.  Expand ``f`` at the
pole in the coordinates ``(z1, conj z1, w = z2 - 1)`` with coefficients
``b[h, k, m]``.  Along the scaled discs ``D_{t a}`` with ``|a| = 1`` a monomial
contributes to the N-moment at order ``t^-(h + k + 2m)``, so::

    lim_{t -> oo} t^l_o * mu(t e^{i theta}, N)
        = sum over h + k + 2m = l_o, k > N of
          b[h, k, m] * monomial_moment(h, k, m, N) * e^{i theta (h - k)}

Pick ``l_o`` as the lowest weighted degree carrying a conjugated ``z1`` and
``k_o`` as the largest such power at that level, and set ``N = k_o - 1``.
Then ``m`` is determined by ``h``, each Fourier frequency isolates one
coefficient, and its multiplier ``monomial_moment(h, k_o, m, k_o - 1)`` is
``+-1``.  A nonzero coefficient therefore shows up as a nonzero Fourier mode:
that mode is the obstruction witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .boundary import (
    BPoly2,
    BPolyN,
    NotNormalFormError,
    expansion_at_pole,
    from_expansion_at_pole,
    holomorphic_part,
    is_normal,
    normal_form,
)
from .exact import ZERO, GComplex, ParamPoly
from .moments import first_nonvanishing_moment, moment_symbolic, monomial_moment, moments_vanish

__all__ = [
    "LeadingAsymptotic",
    "CascadeStep",
    "Extends",
    "Obstructed",
    "InvariantViolation",
    "leading_asymptotic",
    "scaling_limit",
    "cascade",
    "certify",
]


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this is a bug, not a verdict."""


@dataclass(frozen=True)
class LeadingAsymptotic:
    """``lim t^l_o G(t e^{i theta}, N) / (2 pi i)`` as a finite Fourier series."""

    l_o: int
    N: int
    modes: dict[int, GComplex]

    def nonzero_modes(self) -> dict[int, GComplex]:
        return {d: c for d, c in sorted(self.modes.items()) if c}


@dataclass(frozen=True)
class CascadeStep:
    l_o: int
    k_o: int
    N: int
    killed: tuple[tuple[int, int, int], ...]  # (h, k, m) in pole coordinates


@dataclass(frozen=True)
class Extends:
    """``f`` agrees on the sphere with the holomorphic polynomial ``extension``.

    A non-empty ``steps`` means the verdict was produced by replaying the
    cascade under the assumption that all moments vanish; ``steps`` then
    lists the coefficients that assumption forced to zero.
    """

    extension: BPoly2 | BPolyN
    steps: tuple[CascadeStep, ...] = ()

    status = "extends"


@dataclass(frozen=True)
class Obstructed:
    """A disc moment that does not vanish.

    ``coefficient`` is the Fourier mode at ``frequency`` of
    ``lim t^l_o * mu(t e^{i theta}, N)``; ``route`` is ``"cascade"`` for
    conj(z2)-free input and ``"moment"`` otherwise.  ``N == k_o - 1`` always.
    """

    l_o: int | None
    k_o: int | None
    N: int | None
    frequency: int | None
    coefficient: GComplex | None
    route: str = "cascade"
    detail: dict = field(default_factory=dict, compare=False)

    status = "obstructed"


def _leading(b: dict, N: int) -> LeadingAsymptotic:
    levels = [h + k + 2 * m for (h, k, m), c in b.items() if k > N and c]
    if not levels:
        raise ValueError(f"no antiholomorphic content above N = {N}")
    l_o = min(levels)
    modes: dict[int, GComplex] = {}
    for (h, k, m), c in b.items():
        if k > N and h + k + 2 * m == l_o:
            modes[h - k] = modes.get(h - k, ZERO) + c * monomial_moment(h, k, m, N)
    return LeadingAsymptotic(l_o, N, modes)


def leading_asymptotic(f: BPoly2, N: int) -> LeadingAsymptotic:
    """Leading term of the N-moment along ``a -> t e^{i theta}``, ``t -> oo``."""
    if not is_normal(f):
        raise NotNormalFormError("leading_asymptotic expects sphere normal form")
    return _leading(expansion_at_pole(f), N)


def scaling_limit(q: ParamPoly, L: int) -> LeadingAsymptotic:
    """Leading behaviour of ``q(t e^{i theta}, t e^{-i theta}) / (1 + t^2)^L``.

    The quotient is ``~ t^-l_o`` times a trigonometric polynomial; returns
    ``l_o`` and that polynomial's modes.  ``N`` is not known here and is set
    to -1.
    """
    if not q:
        raise ValueError("the zero moment has no leading term")
    top = q.total_degree()
    modes = {p - r: c for (p, r), c in q.items() if p + r == top}
    return LeadingAsymptotic(2 * L - top, -1, modes)


def _pick_mode(asym: LeadingAsymptotic) -> tuple[int, GComplex] | None:
    nz = asym.nonzero_modes()
    if not nz:
        return None
    d = min(nz)
    return d, nz[d]


def cascade(f: BPoly2, assume_moments_vanish: bool = False) -> Extends | Obstructed:
    """Run the coefficient-killing cascade on a conj(z2)-free normal-form ``f``.

    Ties are broken as in the argument itself: lowest weighted degree first,
    then the highest power of conj(z1) at that degree.
    """
    if not is_normal(f):
        raise NotNormalFormError("cascade expects sphere normal form")
    if any(mono.p for mono in f.keys()):
        raise ValueError("cascade needs conj(z2)-free input; use certify instead")
    b = expansion_at_pole(f)
    steps: list[CascadeStep] = []
    while True:
        anti = [key for key in b if key[1] > 0]
        if not anti:
            return Extends(from_expansion_at_pole(b), tuple(steps))
        l_o = min(h + k + 2 * m for h, k, m in anti)
        k_o = max(k for h, k, m in anti if h + k + 2 * m == l_o)
        N = k_o - 1
        asym = _leading(b, N)
        if asym.l_o != l_o:
            raise InvariantViolation(f"leading level {asym.l_o} != l_o {l_o}")
        level = [(h, k, m) for h, k, m in anti if h + k + 2 * m == l_o and k == k_o]
        freqs = [h - k_o for h, _, _ in level]
        if len(set(freqs)) != len(freqs):
            raise InvariantViolation("frequency map h -> h - k_o is not injective")
        for h, k, m in level:
            mult = monomial_moment(h, k, m, N)
            if asym.modes.get(h - k_o) != b[(h, k, m)] * mult or mult not in (1, -1):
                raise InvariantViolation(f"mode {h - k_o} does not isolate b[{h}, {k}, {m}]")
        if not assume_moments_vanish:
            picked = _pick_mode(asym)
            if picked is None:
                raise InvariantViolation("antiholomorphic level with all modes zero")
            d, c = picked
            return Obstructed(l_o, k_o, N, d, c, "cascade")
        # each vanishing mode forces its isolated coefficient to zero
        steps.append(CascadeStep(l_o, k_o, N, tuple(sorted(level))))
        for key in level:
            del b[key]


def certify(f: BPoly2) -> Extends | Obstructed:
    """Does ``f`` extend holomorphically from the sphere to the ball in C^2?"""
    if isinstance(f, BPolyN):
        f = f.to_bpoly2()
    g = normal_form(f)
    if moments_vanish(g):
        return Extends(holomorphic_part(g))
    if not any(mono.p for mono in g.keys()):
        cert = cascade(g)
        if not isinstance(cert, Obstructed):
            raise InvariantViolation("cascade found no obstruction but a moment is nonzero")
        return cert
    found = first_nonvanishing_moment(g)
    if found is None:
        raise InvariantViolation("moments_vanish is false but no nonzero moment was found")
    N, q = found
    asym = scaling_limit(q, _clearing_power(g))
    d, c = _pick_mode(asym)
    return Obstructed(asym.l_o, N + 1, N, d, c, "moment")


def _clearing_power(g: BPoly2) -> int:
    return max(mono.weight for mono in g.keys())


def witness_from_symbolic(f: BPoly2, N: int) -> LeadingAsymptotic:
    """Leading asymptotic recomputed from ``moment_symbolic`` (independent of the closed form)."""
    g = normal_form(f)
    return scaling_limit(moment_symbolic(g, N), _clearing_power(g))

