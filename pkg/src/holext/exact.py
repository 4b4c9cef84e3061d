"""Exact Gaussian-rational arithmetic and the two sparse polynomial algebras.

``GComplex`` is a complex number with :class:`fractions.Fraction` parts.
``CircPoly`` is a Laurent polynomial in the circle variable tau, where every
occurrence of conj(tau) has already been replaced by 1/tau.  ``ParamPoly`` is
a polynomial in the formal pair (alpha, alpha_bar), the two treated as
independent commuting variables.

Contour integrals are never materialised: a moment ``G`` is always reported
as the value ``mu`` with ``G = 2*pi*i * mu``, and ``mu`` is the residue.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator

__all__ = [
    "GComplex",
    "CircPoly",
    "ParamPoly",
    "as_gcomplex",
    "circ_reduce",
    "residue",
    "param_is_zero",
    "exact_rank",
    "rank_mod_p",
]


class GComplex:
    """Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GComplex":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    _LITERAL = re.compile(
        r"""^\s*(?:
            (?P<re>[+-]?\d+(?:/\d+)?)
            (?:\s*(?P<isign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*i)?
          |
            (?P<imonly>[+-]?(?:\d+(?:/\d+)?)?)\s*i
        )\s*$""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "GComplex":
        """Parse ``"p/q"``, ``"p/q+r/si"``, ``"2i"`` or ``"-i"``; outer parentheses allowed."""
        s = text.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        mt = cls._LITERAL.match(s)
        if mt is None:
            raise ValueError(f"not a Gaussian rational literal: {text!r}")
        if mt.group("re") is not None:
            re_part = Fraction(mt.group("re"))
            im_part = Fraction(0)
            if mt.group("isign"):
                im_part = Fraction(mt.group("im") or 1)
                if mt.group("isign") == "-":
                    im_part = -im_part
            return cls._make(re_part, im_part)
        body = mt.group("imonly")
        if body in ("", "+"):
            return cls._make(Fraction(0), Fraction(1))
        if body == "-":
            return cls._make(Fraction(0), Fraction(-1))
        return cls._make(Fraction(0), Fraction(body))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    def __repr__(self) -> str:
        return f"GComplex({self})"

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GComplex):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GComplex":
        return GComplex._make(-self.re, -self.im)

    def __pos__(self) -> "GComplex":
        return self

    def __add__(self, other) -> "GComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GComplex._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GComplex._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "GComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "GComplex":
        if isinstance(other, int):
            return GComplex._make(self.re * other, self.im * other)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.im == 0:
            return GComplex._make(self.re * o.re, self.im * o.re)
        return GComplex._make(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        n = self * o.conj()
        return GComplex._make(n.re / d, n.im / d)

    def __rtruediv__(self, other) -> "GComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "GComplex":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GComplex._make(Fraction(1), Fraction(0)) / (self ** (-n))
        result = GComplex._make(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GComplex":
        return GComplex._make(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im


ZERO = GComplex()
ONE = GComplex(1)
I = GComplex(0, 1)


def _coerce(x) -> GComplex | None:
    if isinstance(x, GComplex):
        return x
    if isinstance(x, (int, Rational)):
        return GComplex._make(Fraction(x), Fraction(0))
    return None


def as_gcomplex(x) -> GComplex:
    """Coerce ints, Fractions and Gaussian literals (strings) to ``GComplex``."""
    if isinstance(x, str):
        return GComplex.parse(x)
    g = _coerce(x)
    if g is None:
        raise TypeError(f"cannot interpret {x!r} as an exact Gaussian rational")
    return g


class _Sparse:
    """Immutable sparse map key -> nonzero GComplex with ring operations.

    Subclasses define ``_key_mul`` (how exponents combine) and ``_one_key``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                c = as_gcomplex(c)
                key = self._check_key(key)
                if key in clean:
                    c = clean[key] + c
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self._terms = clean

    @staticmethod
    def _check_key(key):
        return key

    def _new(self, terms: dict):
        # terms must already be free of zero coefficients
        obj = object.__new__(type(self))
        obj._terms = terms
        return obj

    def _key_mul(self, a, b):
        raise NotImplementedError

    def _one_key(self):
        raise NotImplementedError

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> GComplex:
        return self._terms.get(key, ZERO)

    def __getitem__(self, key) -> GComplex:
        return self.coeff(key)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Rational, GComplex)):
            c = as_gcomplex(other)
            if not c:
                return not self._terms
            return self._terms == {self._one_key(): c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def _lift(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, (int, Rational, GComplex)):
            c = as_gcomplex(other)
            return self._new({self._one_key(): c} if c else {})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = as_gcomplex(c)
        if not c:
            return self._new({})
        return self._new({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational, GComplex)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        out: dict = {}
        km = self._key_mul
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = km(k1, k2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return self._new({k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Rational, GComplex)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self._lift(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {c}" for k, c in sorted(self._terms.items()))
        return f"{type(self).__name__}({{{body}}})"


class CircPoly(_Sparse):
    """Laurent polynomial ``sum c_e tau^e`` on the unit circle."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        if not isinstance(key, int):
            raise TypeError(f"tau exponent must be an int, got {key!r}")
        return key

    def _key_mul(self, a: int, b: int) -> int:
        return a + b

    def _one_key(self) -> int:
        return 0

    @classmethod
    def tau(cls, e: int = 1) -> "CircPoly":
        return cls({e: 1})

    def shift(self, n: int) -> "CircPoly":
        """Multiply by ``tau**n``."""
        return self._new({e + n: c for e, c in self._terms.items()})

    def residue(self) -> GComplex:
        return self.coeff(-1)

    def evaluate(self, tau: GComplex) -> GComplex:
        tau = as_gcomplex(tau)
        total = ZERO
        for e, c in self._terms.items():
            total = total + c * tau**e
        return total

    def conj(self) -> "CircPoly":
        """Conjugate as a function on |tau| = 1: tau^e -> tau^-e."""
        return self._new({-e: c.conj() for e, c in self._terms.items()})


class ParamPoly(_Sparse):
    """Polynomial ``sum c_pq alpha^p alpha_bar^q`` in the formal disc parameter."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        p, q = key
        if p < 0 or q < 0:
            raise ValueError(f"negative exponent in {key!r}")
        return (int(p), int(q))

    def _key_mul(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _one_key(self):
        return (0, 0)

    @classmethod
    def alpha(cls) -> "ParamPoly":
        return cls({(1, 0): 1})

    @classmethod
    def alpha_bar(cls) -> "ParamPoly":
        return cls({(0, 1): 1})

    def evaluate(self, a) -> GComplex:
        """Substitute alpha <- a, alpha_bar <- conj(a)."""
        a = as_gcomplex(a)
        ab = a.conj()
        total = ZERO
        for (p, q), c in self._terms.items():
            total = total + c * a**p * ab**q
        return total

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero ParamPoly is undefined")
        return max(p + q for p, q in self._terms)


def circ_reduce(terms: Iterable[tuple[int, int, object]]) -> CircPoly:
    """Collapse ``c * tau^j * conj(tau)^k`` terms to ``c * tau^(j-k)``."""
    return CircPoly((j - k, c) for j, k, c in terms)


def residue(p: CircPoly) -> GComplex:
    """Coefficient of ``tau^-1``; the contour integral is ``2*pi*i`` times this."""
    return p.residue()


def param_is_zero(q: ParamPoly) -> bool:
    return q.is_zero()


def exact_rank(rows: list[list]) -> int:
    """Rank over Q(i) by fraction-exact Gaussian elimination."""
    mat = [[as_gcomplex(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = ONE / mat[rank][col]
        prow = [x * inv for x in mat[rank]]
        mat[rank] = prow
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_mod_p(rows: list[list], p: int = 1_000_000_009) -> int:
    """Rank of the image of ``rows`` under Z[i] -> F_p, i -> sqrt(-1) mod p.

    Needs ``p = 1 mod 4``.  Minors map to minors, so the result never exceeds
    the rank over Q(i); a full rank mod p therefore proves full rank exactly.
    """
    if p % 4 != 1:
        raise ValueError("p must be 1 mod 4 so that -1 is a square")
    g = 2
    while pow(g, (p - 1) // 2, p) != p - 1:
        g += 1
    r = pow(g, (p - 1) // 4, p)

    def red(x) -> int:
        x = as_gcomplex(x)
        out = 0
        for part, unit in ((x.re, 1), (x.im, r)):
            if part:
                den = part.denominator % p
                if den == 0:
                    raise ZeroDivisionError(f"denominator divisible by {p}")
                out += part.numerator * unit * pow(den, -1, p)
        return out % p

    mat = [[red(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = [x * inv % p for x in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], prow)]
        rank += 1
    return rank
