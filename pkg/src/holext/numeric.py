"""Floating-point cross-checks: trapezoid moments and per-disc Fourier tests.

Along a disc, ``f(D_a(tau))`` is a trigonometric polynomial in
``theta = arg(tau)``, so the equispaced trapezoid rule is exact (up to
rounding) once the number of nodes exceeds the bandwidth.  The node-count
precondition ``nodes >= 2 * (weighted_degree(f) + N) + 3`` is enforced
rather than hoping for convergence.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .boundary import BPoly2, Z1, Z1BAR, random_sphere_points
from .certify import certify
from .moments import moment

__all__ = [
    "QuadConfig",
    "InsufficientNodes",
    "default_nodes",
    "moment_quad",
    "fourier_coefficients",
    "disc_fourier_test",
    "line_fourier_test",
    "interior_center_demo",
]

NODES_ENV = "HOLEXT_NODES"


class InsufficientNodes(ValueError):
    pass


def default_nodes() -> int:
    return int(os.environ.get(NODES_ENV, 257))


@dataclass(frozen=True)
class QuadConfig:
    nodes: int = 257
    tolerance: float = 1e-10

    def __post_init__(self):
        if self.nodes < 1:
            raise ValueError("nodes must be positive")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


def _bandwidth(f: BPoly2) -> int:
    return max((mono.weight for mono in f.keys()), default=0)


def _require_nodes(f: BPoly2, N: int, cfg: QuadConfig) -> None:
    need = 2 * (_bandwidth(f) + N) + 3
    if cfg.nodes < need:
        raise InsufficientNodes(f"{cfg.nodes} nodes < {need} required for this integrand")


def _arrays(f: BPoly2):
    keys = list(f.keys())
    exps = np.array([tuple(k) for k in keys], dtype=int).reshape(-1, 4)
    coeffs = np.array([complex(f[k]) for k in keys], dtype=complex)
    return exps, coeffs


def _circle(nodes: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(nodes) / nodes)


def disc_values(f: BPoly2, a: complex, tau: np.ndarray) -> np.ndarray:
    """``f(D_a(tau))`` for an array of circle points."""
    a = complex(a)
    c = 1.0 / (1.0 + abs(a) ** 2)
    z1 = c * (tau - 1) * a
    z2 = c * (tau - 1) + 1
    exps, coeffs = _arrays(f)
    if not len(coeffs):
        return np.zeros_like(tau)
    h, k, m, p = (exps[:, i][None, :] for i in range(4))
    z1, z2 = z1[:, None], z2[:, None]
    vals = z1**h * np.conj(z1) ** k * z2**m * np.conj(z2) ** p
    return vals @ coeffs


def moment_quad(f: BPoly2, a: complex, N: int, cfg: QuadConfig | None = None) -> complex:
    """Trapezoid value of ``(1 / 2 pi i) * integral tau^N f(D_a(tau)) dtau``."""
    cfg = cfg or QuadConfig(default_nodes())
    _require_nodes(f, N, cfg)
    tau = _circle(cfg.nodes)
    # dtau = i tau dtheta
    return complex(np.mean(tau ** (N + 1) * disc_values(f, a, tau)))


def fourier_coefficients(values: np.ndarray, max_freq: int) -> dict[int, complex]:
    """Coefficients ``c_j``, ``|j| <= max_freq``, of samples on an equispaced circle grid."""
    M = len(values)
    theta = 2 * np.pi * np.arange(M) / M
    return {j: complex(np.mean(values * np.exp(-1j * j * theta))) for j in range(-max_freq, max_freq + 1)}


def disc_fourier_test(f: BPoly2, a: complex, cfg: QuadConfig | None = None) -> float:
    """``max_{j > 0} |c_{-j}|`` for ``theta -> f(D_a(e^{i theta}))``; zero iff f extends along D_a."""
    cfg = cfg or QuadConfig(default_nodes())
    _require_nodes(f, 0, cfg)
    B = _bandwidth(f)
    if B == 0:
        return 0.0
    coeffs = fourier_coefficients(disc_values(f, a, _circle(cfg.nodes)), B)
    return max(abs(coeffs[-j]) for j in range(1, B + 1))


def line_values(f: BPoly2, v, tau: np.ndarray) -> np.ndarray:
    """``f(tau v)`` on the boundary circle of the line through 0 in direction unit ``v``."""
    exps, coeffs = _arrays(f)
    z1 = tau[:, None] * complex(v[0])
    z2 = tau[:, None] * complex(v[1])
    h, k, m, p = (exps[:, i][None, :] for i in range(4))
    return (z1**h * np.conj(z1) ** k * z2**m * np.conj(z2) ** p) @ coeffs


def line_fourier_test(f: BPoly2, v, cfg: QuadConfig | None = None) -> float:
    cfg = cfg or QuadConfig(default_nodes())
    _require_nodes(f, 0, cfg)
    B = _bandwidth(f)
    if B == 0:
        return 0.0
    coeffs = fourier_coefficients(line_values(f, v, _circle(cfg.nodes)), B)
    return max(abs(coeffs[-j]) for j in range(1, B + 1))


def _demo_lines(count: int, seed: int) -> list[tuple[complex, complex]]:
    lines = [(1 + 0j, 0j), (0.6 + 0j, 0.8 + 0j)]
    for pt in random_sphere_points(2, max(0, count - len(lines)), seed=seed):
        lines.append((complex(pt[0]), complex(pt[1])))
    return lines[:count]


def interior_center_demo(lines: int = 20, cfg: QuadConfig | None = None, seed: int = 7) -> dict:
    """Contrast lines through the centre with discs through a boundary point for ``|z1|^2``.

    Every complex line through 0 meets the sphere in a circle on which
    ``|z1|^2`` is constant, so the function extends along all of them; the
    discs through the pole detect that it does not extend to the ball.
    """
    cfg = cfg or QuadConfig(default_nodes())
    f = Z1 * Z1BAR
    rows = []
    for v in _demo_lines(lines, seed):
        vals = line_values(f, v, _circle(cfg.nodes))
        rows.append(
            {
                "v": [[z.real, z.imag] for z in v],
                "restriction": float(np.mean(vals).real),
                "spread": float(np.ptp(vals.real) + np.ptp(vals.imag)),
                "max_negative_fourier": line_fourier_test(f, v, cfg),
            }
        )
    cert = certify(f)
    return {
        "function": "z1*~z1",
        "lines_through_origin": rows,
        "all_lines_extend": all(r["max_negative_fourier"] <= 1e-12 for r in rows),
        "disc_through_pole": {
            "a": "1",
            "N": 0,
            "mu": str(moment(f, 1, 0)),
            "mu_quad": moment_quad(f, 1, 0, cfg).real,
            "max_negative_fourier": disc_fourier_test(f, 1, cfg),
        },
        "certificate": cert,
        "nodes": cfg.nodes,
    }
