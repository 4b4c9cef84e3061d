"""Boundary polynomials on the unit sphere and their normal form.

A boundary polynomial in C^2 is a finite sum of monomials
``z1^h conj(z1)^k z2^m conj(z2)^p``.  The second variable carries weight 2,
so the weighted degree of a monomial is ``h + k + 2m + 2p``.  On the sphere
``|z1|^2 + |z2|^2 = 1`` the product ``z2 conj(z2)`` can always be traded for
``1 - z1 conj(z1)``; the normal form has ``min(m, p) = 0`` in every monomial
and is unique, which is what makes "no conjugated variable" a well posed
test for holomorphy.

The n-dimensional analogue ``BPolyN`` stores pairs of multi-indices and
normalises with ``zn conj(zn) -> 1 - sum_{i<n} zi conj(zi)``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple, Sequence

from .exact import ZERO, GComplex, _Sparse, as_gcomplex

__all__ = [
    "Mono2",
    "BPoly2",
    "BPolyN",
    "NotNormalFormError",
    "weighted_degree",
    "normal_form",
    "is_normal",
    "is_holomorphic",
    "holomorphic_part",
    "expansion_at_pole",
    "from_expansion_at_pole",
    "sphere_point",
    "random_sphere_points",
    "normal_monomials",
    "normal_monomials_nd",
    "Z1",
    "Z1BAR",
    "Z2",
    "Z2BAR",
]


class NotNormalFormError(ValueError):
    """Raised when an operation needs the sphere normal form and did not get it."""


class Mono2(NamedTuple):
    h: int = 0  # z1
    k: int = 0  # conj(z1)
    m: int = 0  # z2
    p: int = 0  # conj(z2)

    @property
    def weight(self) -> int:
        return self.h + self.k + 2 * self.m + 2 * self.p

    @property
    def antiholomorphic_order(self) -> int:
        return self.k + self.p

    def is_normal(self) -> bool:
        return min(self.m, self.p) == 0


def _term_text(coeff: GComplex, factors: list[str], first: bool) -> str:
    neg = False
    c = coeff
    if c.im == 0 and c.re < 0:
        neg, c = True, -c
    if factors:
        body = "*".join(factors)
        if c != 1:
            body = f"{c}*{body}" if c.im == 0 else f"({c})*{body}"
    else:
        body = f"({c})" if c.im != 0 else str(c)
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def _factor(name: str, e: int) -> list[str]:
    if e == 0:
        return []
    return [name if e == 1 else f"{name}^{e}"]


class BPoly2(_Sparse):
    """Polynomial in z1, conj(z1), z2, conj(z2) with Gaussian rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        mono = Mono2(*key)
        if min(mono) < 0:
            raise ValueError(f"negative exponent in {mono}")
        return mono

    def _key_mul(self, a: Mono2, b: Mono2) -> Mono2:
        return Mono2(a.h + b.h, a.k + b.k, a.m + b.m, a.p + b.p)

    def _one_key(self) -> Mono2:
        return Mono2()

    @classmethod
    def monomial(cls, h=0, k=0, m=0, p=0, coeff=1) -> "BPoly2":
        return cls({Mono2(h, k, m, p): coeff})

    @classmethod
    def const(cls, c) -> "BPoly2":
        return cls({Mono2(): c})

    def conj(self) -> "BPoly2":
        return self._new({Mono2(k.k, k.h, k.p, k.m): c.conj() for k, c in self.items()})

    def evaluate(self, z1, z2) -> GComplex:
        z1, z2 = as_gcomplex(z1), as_gcomplex(z2)
        w1, w2 = z1.conj(), z2.conj()
        total = ZERO
        for (h, k, m, p), c in self.items():
            total = total + c * z1**h * w1**k * z2**m * w2**p
        return total

    def sorted_terms(self) -> list[tuple[Mono2, GComplex]]:
        return sorted(self.items(), key=lambda kv: (kv[0].weight, tuple(kv[0])))

    def to_text(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, ((h, k, m, p), c) in enumerate(self.sorted_terms()):
            factors = _factor("z1", h) + _factor("~z1", k) + _factor("z2", m) + _factor("~z2", p)
            parts.append(_term_text(c, factors, i == 0))
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def to_nd(self) -> "BPolyN":
        return BPolyN(2, {((h, m), (k, p)): c for (h, k, m, p), c in self.items()})


Z1 = BPoly2.monomial(h=1)
Z1BAR = BPoly2.monomial(k=1)
Z2 = BPoly2.monomial(m=1)
Z2BAR = BPoly2.monomial(p=1)


def weighted_degree(f) -> int:
    """Largest weighted degree over the monomials of ``f`` (``BPoly2`` or ``BPolyN``)."""
    if not f:
        raise ValueError("weighted degree of the zero polynomial is undefined")
    if isinstance(f, BPolyN):
        return max(f.mono_weight(key) for key in f.keys())
    return max(mono.weight for mono in f.keys())


@lru_cache(maxsize=None)
def _one_minus_r2(r: int) -> tuple[tuple[Mono2, int], ...]:
    # (1 - z1 conj(z1))^r
    return tuple((Mono2(j, j, 0, 0), (-1) ** j * comb(r, j)) for j in range(r + 1))


def normal_form(f: BPoly2) -> BPoly2:
    """Rewrite ``z2 conj(z2) -> 1 - z1 conj(z1)`` until no monomial holds both."""
    if isinstance(f, BPolyN):
        return f.normal_form()
    out: dict[Mono2, GComplex] = {}
    for mono, c in f.items():
        r = min(mono.m, mono.p)
        if r == 0:
            out[mono] = out.get(mono, ZERO) + c
            continue
        h, k, m, p = mono.h, mono.k, mono.m - r, mono.p - r
        for (jh, jk, _, _), b in _one_minus_r2(r):
            key = Mono2(h + jh, k + jk, m, p)
            out[key] = out.get(key, ZERO) + c * b
    return BPoly2({k: c for k, c in out.items() if c})


def is_normal(f) -> bool:
    if isinstance(f, BPolyN):
        return all(min(mu[-1], nu[-1]) == 0 for mu, nu in f.keys())
    return all(mono.is_normal() for mono in f.keys())


def is_holomorphic(f) -> bool:
    """True iff the normal-form polynomial ``f`` has no conjugated variable."""
    if not is_normal(f):
        raise NotNormalFormError("is_holomorphic expects a polynomial in sphere normal form")
    if isinstance(f, BPolyN):
        return all(not any(nu) for _, nu in f.keys())
    return all(mono.k == 0 and mono.p == 0 for mono in f.keys())


def holomorphic_part(f):
    if not is_normal(f):
        raise NotNormalFormError("holomorphic_part expects a polynomial in sphere normal form")
    if isinstance(f, BPolyN):
        return BPolyN(f.n, {key: c for key, c in f.items() if not any(key[1])})
    return BPoly2({mono: c for mono, c in f.items() if mono.k == 0 and mono.p == 0})


def expansion_at_pole(f: BPoly2) -> dict[tuple[int, int, int], GComplex]:
    """Coefficients ``b[h, k, m]`` of ``f`` in the local coordinates (z1, conj z1, w = z2 - 1).

    Only defined for polynomials free of conj(z2).  Expanding at the pole
    (0, 1) is what gives the weight-2 grading its meaning: along the discs
    through the pole, ``z1`` is O(1/t) while ``w`` is O(1/t^2).
    """
    out: dict[tuple[int, int, int], GComplex] = {}
    for (h, k, m, p), c in f.items():
        if p:
            raise ValueError("expansion at the pole needs a conj(z2)-free polynomial")
        for j in range(m + 1):
            key = (h, k, j)
            out[key] = out.get(key, ZERO) + c * comb(m, j)
    return {key: c for key, c in out.items() if c}


def from_expansion_at_pole(b: dict[tuple[int, int, int], GComplex]) -> BPoly2:
    """Inverse of :func:`expansion_at_pole`: substitute ``w = z2 - 1`` back."""
    out = BPoly2()
    for (h, k, m), c in b.items():
        for j in range(m + 1):
            out = out + BPoly2.monomial(h, k, j, 0, c * comb(m, j) * (-1) ** (m - j))
    return out


def normal_monomials(max_weight: int) -> list[Mono2]:
    """All normal-form monomials of weighted degree <= ``max_weight``."""
    out = []
    for h in range(max_weight + 1):
        for k in range(max_weight + 1 - h):
            rest = max_weight - h - k
            for m in range(rest // 2 + 1):
                for p in range((rest - 2 * m) // 2 + 1):
                    if min(m, p) == 0:
                        out.append(Mono2(h, k, m, p))
    return sorted(out, key=lambda mono: (mono.weight, tuple(mono)))


# --- n dimensions -----------------------------------------------------------


class BPolyN(_Sparse):
    """Polynomial in z_1..z_n and their conjugates; keys are ``(mu, nu)`` multi-index pairs."""

    __slots__ = ("n",)

    def __init__(self, n: int, terms=None):
        if n < 2:
            raise ValueError("dimension must be at least 2")
        self.n = n
        super().__init__(terms)
        for mu, nu in self._terms:
            if len(mu) != n or len(nu) != n:
                raise ValueError(f"multi-index length does not match n={n}")

    @staticmethod
    def _check_key(key):
        mu, nu = key
        mu, nu = tuple(int(x) for x in mu), tuple(int(x) for x in nu)
        if min(mu + nu) < 0:
            raise ValueError("negative exponent")
        return (mu, nu)

    def _new(self, terms):
        obj = object.__new__(type(self))
        obj._terms = terms
        obj.n = self.n
        return obj

    def _key_mul(self, a, b):
        return (
            tuple(x + y for x, y in zip(a[0], b[0])),
            tuple(x + y for x, y in zip(a[1], b[1])),
        )

    def _one_key(self):
        z = (0,) * self.n
        return (z, z)

    def _lift(self, other):
        if isinstance(other, BPolyN) and other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return super()._lift(other)

    def __eq__(self, other):
        if isinstance(other, BPolyN) and other.n != self.n:
            return False
        return super().__eq__(other)

    __hash__ = _Sparse.__hash__

    @classmethod
    def var(cls, n: int, i: int, conj: bool = False) -> "BPolyN":
        """The coordinate ``z_i`` (1-based), or its conjugate."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        e = tuple(1 if j == i - 1 else 0 for j in range(n))
        z = (0,) * n
        return cls(n, {((z, e) if conj else (e, z)): 1})

    @classmethod
    def const(cls, n: int, c) -> "BPolyN":
        z = (0,) * n
        return cls(n, {(z, z): c})

    def mono_weight(self, key) -> int:
        mu, nu = key
        return sum(mu[:-1]) + sum(nu[:-1]) + 2 * (mu[-1] + nu[-1])

    def evaluate(self, z: Sequence) -> GComplex:
        z = [as_gcomplex(x) for x in z]
        zb = [x.conj() for x in z]
        total = ZERO
        for (mu, nu), c in self.items():
            t = c
            for i in range(self.n):
                if mu[i]:
                    t = t * z[i] ** mu[i]
                if nu[i]:
                    t = t * zb[i] ** nu[i]
            total = total + t
        return total

    def normal_form(self) -> "BPolyN":
        n = self.n
        rel = BPolyN.const(n, 1)
        for i in range(1, n):
            rel = rel - BPolyN.var(n, i) * BPolyN.var(n, i, conj=True)
        out = BPolyN(n)
        for (mu, nu), c in self.items():
            r = min(mu[-1], nu[-1])
            base = BPolyN(n, {((*mu[:-1], mu[-1] - r), (*nu[:-1], nu[-1] - r)): c})
            out = out + (base * rel**r if r else base)
        return out

    def sorted_terms(self):
        return sorted(self.items(), key=lambda kv: (self.mono_weight(kv[0]), kv[0]))

    def to_text(self) -> str:
        if not self:
            return "0"
        parts = []
        for idx, ((mu, nu), c) in enumerate(self.sorted_terms()):
            factors = []
            for i in range(self.n):
                factors += _factor(f"z{i + 1}", mu[i]) + _factor(f"~z{i + 1}", nu[i])
            parts.append(_term_text(c, factors, idx == 0))
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BPolyN({self.n}, {self.to_text()!r})"

    def to_bpoly2(self) -> BPoly2:
        if self.n != 2:
            raise ValueError("only a two-dimensional BPolyN converts to BPoly2")
        return BPoly2({Mono2(mu[0], nu[0], mu[1], nu[1]): c for (mu, nu), c in self.items()})


def normal_monomials_nd(n: int, max_weight: int) -> list[tuple[tuple, tuple]]:
    """Normal-form ``(mu, nu)`` keys in dimension ``n`` with weighted degree <= ``max_weight``."""
    keys = []

    def rec(prefix: list[int], budget: int):
        if len(prefix) == 2 * (n - 1):
            for a in range(budget // 2 + 1):
                for b in range((budget - 2 * a) // 2 + 1):
                    if min(a, b) == 0:
                        mu = tuple(prefix[0::2]) + (a,)
                        nu = tuple(prefix[1::2]) + (b,)
                        keys.append((mu, nu))
            return
        for e in range(budget + 1):
            rec(prefix + [e], budget - e)

    rec([], max_weight)
    probe = BPolyN(n)
    return sorted(keys, key=lambda key: (probe.mono_weight(key), key))


# --- exact points of spheres -------------------------------------------------


def sphere_point(xs: Sequence) -> tuple[GComplex, ...]:
    """Inverse stereographic image of ``xs`` in Q^(2n-1) on the unit sphere of C^n.

    The point is ``(2x, |x|^2 - 1) / (|x|^2 + 1)`` read as complex coordinates
    (re, im) pairs; it lies exactly on the sphere.
    """
    xs = [Fraction(x) for x in xs]
    if len(xs) % 2 == 0:
        raise ValueError("need an odd number of real coordinates (2n - 1)")
    r2 = sum(x * x for x in xs)
    d = r2 + 1
    real = [2 * x / d for x in xs] + [(r2 - 1) / d]
    return tuple(GComplex(real[i], real[i + 1]) for i in range(0, len(real), 2))


def random_sphere_points(n: int, count: int, seed: int = 0, spread: int = 7):
    """``count`` distinct exact points of the unit sphere in C^n, deterministic in ``seed``."""
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        xs = [Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(2 * n - 1)]
        pt = sphere_point(xs)
        key = tuple((z.re, z.im) for z in pt)
        if key not in seen:
            seen.add(key)
            out.append(pt)
    return out
