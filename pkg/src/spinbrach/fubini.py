"""Fubini-Study geometry of rotational manifolds.

A rotational manifold is the two-parameter family
``|psi_m(theta, phi)> = exp(-i phi Sz) exp(-i theta Sy) |m>``. Its metric is
that of a sphere whose radius depends only on ``s`` and ``|m|``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .halfint import HalfInt, as_projection, as_spin, projections
from .rotor import rotation_operator
from .spin import spin_operators

_Y = np.array([0.0, 1.0, 0.0])
_Z = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class MetricTensor2:
    """Metric components in the (theta, phi) chart, scaled by ``gamma**2``."""

    g_tt: float
    g_tp: float
    g_pp: float
    gamma: float = 1.0

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.g_tt, self.g_tp], [self.g_tp, self.g_pp]])

    @property
    def det(self) -> float:
        return self.g_tt * self.g_pp - self.g_tp**2

    def max_abs_dev(self, other: "MetricTensor2") -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))


@dataclass(frozen=True)
class TangentPair:
    d_theta: np.ndarray
    d_phi: np.ndarray


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    return gamma


def _pieces(s, m, theta, phi):
    s = as_spin(s)
    m = as_projection(s, m)
    col = (s.twice - m.twice) // 2
    ry_m = rotation_operator(s, _Y, theta)[:, col]
    rz = rotation_operator(s, _Z, phi)
    return s, ry_m, rz


def state_derivatives(s, m, theta: float, phi: float) -> TangentPair:
    """Analytic theta- and phi-derivatives of ``|psi_m(theta, phi)>``."""
    s, ry_m, rz = _pieces(s, m, theta, phi)
    ops = spin_operators(s)
    d_theta = rz @ (-1j * (ops.sy @ ry_m))
    d_phi = -1j * (ops.sz @ (rz @ ry_m))
    return TangentPair(d_theta, d_phi)


def metric_from_tangents(psi, d_theta, d_phi, gamma: float = 1.0) -> MetricTensor2:
    """Assemble ``g_ab = gamma^2 Re(<a|b> - <a|psi><psi|b>)`` from a state and its tangents.

    The tangents are first projected orthogonally to ``psi``; for normalized
    ``psi`` that gives the same inner products without the subtraction.
    """
    gamma = _check_gamma(gamma)
    psi = np.asarray(psi, dtype=complex)
    horiz = [t - psi * np.vdot(psi, t) for t in (d_theta, d_phi)]

    def g(a, b):
        return gamma**2 * float(np.vdot(horiz[a], horiz[b]).real)

    return MetricTensor2(g(0, 0), g(0, 1), g(1, 1), gamma)


def metric_tensor_numeric(s, m, theta: float, phi: float, gamma: float = 1.0) -> MetricTensor2:
    """Fubini-Study metric evaluated from the state and its analytic derivatives."""
    s, ry_m, rz = _pieces(s, m, theta, phi)
    ops = spin_operators(s)
    psi = rz @ ry_m
    d_theta = rz @ (-1j * (ops.sy @ ry_m))
    d_phi = -1j * (ops.sz @ psi)
    return metric_from_tangents(psi, d_theta, d_phi, gamma)


def _casimir_gap_x4(s: HalfInt, m: HalfInt) -> int:
    """``4 (s + s^2 - m^2)`` as an exact integer."""
    return 2 * s.twice + s.twice**2 - m.twice**2


def metric_tensor_closed(s, m, theta: float, gamma: float = 1.0) -> MetricTensor2:
    """Closed form: ``g_tt = gamma^2 (s + s^2 - m^2) / 2``, ``g_pp = g_tt sin^2 theta``."""
    s = as_spin(s)
    m = as_projection(s, m)
    gamma = _check_gamma(gamma)
    g_tt = gamma**2 * _casimir_gap_x4(s, m) / 8.0
    return MetricTensor2(g_tt, 0.0, g_tt * np.sin(theta) ** 2, gamma)


def manifold_radius(s, m, gamma: float = 1.0) -> float:
    """Radius ``(gamma / sqrt 2) sqrt(s + s^2 - m^2)`` of the manifold through ``|m>``."""
    s = as_spin(s)
    m = as_projection(s, m)
    gamma = _check_gamma(gamma)
    return gamma * np.sqrt(_casimir_gap_x4(s, m) / 8.0)


def manifold_radii(s, gamma: float = 1.0) -> dict[HalfInt, float]:
    """Radius of every rotational manifold of spin ``s``, keyed by projection."""
    s = as_spin(s)
    return {m: manifold_radius(s, m, gamma) for m in projections(s)}


def distinct_manifold_count(s) -> int:
    """Number of geometrically distinct rotational manifolds (``m`` and ``-m`` coincide)."""
    s = as_spin(s)
    return len({_casimir_gap_x4(s, m) for m in projections(s)})


def m0_overlap(theta: float, phi: float, theta2: float, phi2: float) -> float:
    """``<psi_0(theta, phi)|psi_0(theta2, phi2)>`` on the spin-1 ``m = 0`` manifold.

    Real, and equal to the dot product of the two direction vectors.
    """
    return float(
        np.sin(theta) * np.sin(theta2) * np.cos(phi - phi2) + np.cos(theta) * np.cos(theta2)
    )


def fubini_study_distance(a, b, gamma: float = 1.0) -> float:
    """Geodesic distance ``gamma * arccos|<a|b>|`` between normalized states.

    Evaluated as an arctangent of the orthogonal and parallel parts of ``b``
    so that nearby states keep full relative precision.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    par = np.vdot(a, b)
    perp = np.linalg.norm(b - par * a)
    return _check_gamma(gamma) * float(np.arctan2(perp, abs(par)))
