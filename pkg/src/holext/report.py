"""JSON report schema for certificates and moment computations.

Exact values are always strings (``"-3/4"``, ``"1/2+2/3i"``), never floats;
floats appear only inside the ``numeric`` section.  ``dumps`` is canonical
(sorted keys, fixed indentation), so ``dumps(load(dumps(r))) == dumps(r)``.
"""

from __future__ import annotations

import json

from .boundary import BPolyN
from .certify import CascadeStep, Extends, Obstructed
from .exact import GComplex, ParamPoly
from .expr import parse_poly

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "certificate_report",
    "certificate_from_report",
    "format_param",
    "dumps",
    "loads",
]


def format_param(q: ParamPoly) -> str:
    """``ParamPoly`` as text in ``a`` and ``~a`` (the formal conjugate)."""
    if not q:
        return "0"
    parts = []
    for (p, r), c in sorted(q.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        factors = [x for x in (_pow("a", p), _pow("~a", r)) if x]
        neg = c.im == 0 and c.re < 0
        mag = -c if neg else c
        if not factors:
            body = str(mag) if mag.im == 0 else f"({mag})"
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = (str(mag) if mag.im == 0 else f"({mag})") + "*" + "*".join(factors)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def _pow(name: str, e: int) -> str:
    return "" if e == 0 else name if e == 1 else f"{name}^{e}"


def _dim(poly) -> int:
    return poly.n if isinstance(poly, BPolyN) else 2


def certificate_report(cert: Extends | Obstructed, numeric: dict | None = None) -> dict:
    rep: dict = {"schema_version": SCHEMA_VERSION, "status": cert.status}
    if isinstance(cert, Extends):
        rep["dim"] = _dim(cert.extension)
        rep["extension"] = cert.extension.to_text()
        if cert.steps:
            rep["cascade_steps"] = [
                {"l_o": s.l_o, "k_o": s.k_o, "N": s.N, "killed": [list(k) for k in s.killed]}
                for s in cert.steps
            ]
    else:
        rep["witness"] = {
            "route": cert.route,
            "l_o": cert.l_o,
            "k_o": cert.k_o,
            "N": cert.N,
            "frequency": cert.frequency,
            "coefficient": None if cert.coefficient is None else str(cert.coefficient),
        }
        if cert.detail:
            rep["witness"]["detail"] = dict(cert.detail)
    if numeric is not None:
        rep["numeric"] = numeric
    return rep


def certificate_from_report(rep: dict) -> Extends | Obstructed:
    if rep.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {rep.get('schema_version')!r}")
    if rep["status"] == "extends":
        ext = parse_poly(rep["extension"], rep["dim"])
        steps = tuple(
            CascadeStep(s["l_o"], s["k_o"], s["N"], tuple(tuple(k) for k in s["killed"]))
            for s in rep.get("cascade_steps", ())
        )
        return Extends(ext, steps)
    if rep["status"] == "obstructed":
        w = rep["witness"]
        coeff = None if w["coefficient"] is None else GComplex.parse(w["coefficient"])
        return Obstructed(w["l_o"], w["k_o"], w["N"], w["frequency"], coeff, w["route"], dict(w.get("detail", {})))
    raise ValueError(f"not a certificate report: status {rep['status']!r}")


def dumps(rep: dict) -> str:
    return json.dumps(rep, sort_keys=True, indent=2, ensure_ascii=True)


def loads(text: str) -> dict:
    return json.loads(text)

