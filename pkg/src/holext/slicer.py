"""Restriction to complex 2-planes through the origin and the pole of the sphere in C^n.

A plane is spanned by a unit vector ``v`` with ``v_n = 0`` and the pole
``z_o = e_n``; its coordinates ``(zeta1, zeta2)`` map to
``z = zeta1 v + zeta2 z_o`` and the sphere cuts it in
``|zeta1|^2 + |zeta2|^2 = 1``.  Every slice is certified with the
two-dimensional engine; all slices share the line ``L = C z_o`` and their
extensions must agree there.

For polynomial data the global verdict needs no radial-holomorphy or
continuation argument: after reduction modulo the sphere, ``F`` extends iff
no conjugated variable survives.  :func:`certify_nd` decides this way and
cross-checks the verdict against a deterministic family of slices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .boundary import BPoly2, BPolyN, Mono2, is_holomorphic, sphere_point
from .certify import Extends, InvariantViolation, Obstructed, certify
from .exact import ONE, GComplex, as_gcomplex

__all__ = [
    "SlicePlane",
    "SliceReport",
    "slice_restrict",
    "slice_certify_all",
    "certify_nd",
    "standard_planes",
]


@dataclass(frozen=True)
class SlicePlane:
    v: tuple[GComplex, ...]

    def __post_init__(self):
        v = tuple(as_gcomplex(x) for x in self.v)
        object.__setattr__(self, "v", v)
        if len(v) < 2:
            raise ValueError("plane vector needs at least two coordinates")
        if v[-1]:
            raise ValueError("plane vector must have v_n = 0")
        if sum((x.abs2() for x in v), Fraction(0)) != 1:
            raise ValueError("plane vector must have |v|^2 = 1 exactly")

    @property
    def n(self) -> int:
        return len(self.v)

    @classmethod
    def axis(cls, n: int, i: int) -> "SlicePlane":
        return cls(tuple(ONE if j == i - 1 else GComplex() for j in range(n)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.v) + ")"


def slice_restrict(F: BPolyN, plane: SlicePlane) -> BPoly2:
    if plane.n != F.n:
        raise ValueError(f"plane lives in C^{plane.n}, polynomial in C^{F.n}")
    v = plane.v
    vb = [x.conj() for x in v]
    out: dict[Mono2, GComplex] = {}
    for (mu, nu), c in F.items():
        t = c
        for i in range(F.n - 1):
            if mu[i]:
                t = t * v[i] ** mu[i]
            if nu[i]:
                t = t * vb[i] ** nu[i]
        if not t:
            continue
        key = Mono2(sum(mu[:-1]), sum(nu[:-1]), mu[-1], nu[-1])
        out[key] = out.get(key, GComplex()) + t
    return BPoly2(out)


def _on_line(ext: BPoly2) -> BPoly2:
    return BPoly2({mono: c for mono, c in ext.items() if mono.h == 0 and mono.k == 0})


@dataclass(frozen=True)
class SliceReport:
    planes: tuple[SlicePlane, ...]
    certificates: tuple[Extends | Obstructed, ...]
    glued: bool | None  # None unless every slice extends
    common_line: BPoly2 | None

    @property
    def all_extend(self) -> bool:
        return all(isinstance(c, Extends) for c in self.certificates)


def slice_certify_all(F: BPolyN, planes: Sequence[SlicePlane]) -> SliceReport:
    """Certify each slice and check that the slice extensions agree on ``L``.

    The report keeps the input plane order.
    """
    if not planes:
        raise ValueError("need at least one plane")
    certs = tuple(certify(slice_restrict(F, P)) for P in planes)
    glued = None
    common = None
    if all(isinstance(c, Extends) for c in certs):
        lines = [_on_line(c.extension) for c in certs]
        glued = all(line == lines[0] for line in lines)
        common = lines[0] if glued else None
    return SliceReport(tuple(planes), certs, glued, common)


def _unit_vector(n: int, rng: random.Random, spread: int = 5) -> SlicePlane:
    xs = [Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(2 * (n - 1) - 1)]
    head = sphere_point(xs)
    return SlicePlane(tuple(head) + (GComplex(),))


def standard_planes(n: int, count: int = 12, seed: int = 2009) -> list[SlicePlane]:
    """Deterministic plane family: the coordinate axes first, then exact random unit vectors."""
    planes = [SlicePlane.axis(n, i) for i in range(1, n)][:count]
    rng = random.Random(seed)
    seen = {P.v for P in planes}
    while len(planes) < count:
        P = _unit_vector(n, rng)
        if P.v not in seen:
            seen.add(P.v)
            planes.append(P)
    return planes


def certify_nd(F: BPolyN, planes: Sequence[SlicePlane] | None = None, cross_check: bool = True):
    """Does ``F`` extend holomorphically from the sphere to the ball in C^n?

    The verdict comes from the normal form.  With ``cross_check`` the slices
    over ``planes`` (default :func:`standard_planes`) must all extend and
    glue exactly when the verdict is positive; an obstructed verdict takes
    its witness from the first obstructed slice.
    """
    if F.n == 2:
        return certify(F.to_bpoly2())
    G = F.normal_form()
    if planes is None:
        planes = standard_planes(F.n)
    if is_holomorphic(G):
        if cross_check:
            rep = slice_certify_all(F, planes)
            if not rep.all_extend or not rep.glued:
                raise InvariantViolation("holomorphic normal form but a slice is obstructed")
        return Extends(G)
    for idx, P in enumerate(planes):
        cert = certify(slice_restrict(F, P))
        if isinstance(cert, Obstructed):
            detail = {"plane_index": idx, "plane": str(P)}
            return Obstructed(cert.l_o, cert.k_o, cert.N, cert.frequency, cert.coefficient, cert.route, detail)
    # the plane sample missed the obstruction; the coefficient criterion still decides
    return Obstructed(None, None, None, None, None, "coefficient", {"planes_checked": len(planes)})
