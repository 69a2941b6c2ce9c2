"""Time-optimal state transfer on a rotational manifold.

A static field ``omega S.n'`` moves ``|m>`` around a circle of radius
``R sin(theta')`` on the manifold sphere (radius ``R``) at constant speed
``omega R sin(theta')``. Reaching a target at angular separation
``theta_f`` takes ``(2/omega) arcsin(sin(theta_f/2) / sin(theta'))``,
minimized by the perpendicular field ``theta' = pi/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NoCompatibleFieldError, UnreachableTargetError
from .evolution import FieldSpec, clamp_polar
from .fubini import manifold_radius
from .halfint import HalfInt, as_projection, as_spin

HALF_PI = 0.5 * np.pi
_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class TransferProblem:
    """Move ``|m>`` to ``|psi_m(theta_f, phi_f)>`` with field strength ``omega``."""

    s: HalfInt
    m: HalfInt
    theta_f: float
    phi_f: float = 0.0
    omega: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        s = as_spin(self.s)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "m", as_projection(s, self.m))
        object.__setattr__(self, "theta_f", clamp_polar(self.theta_f))
        if not 0.0 <= self.theta_f <= np.pi:
            raise ValueError(f"theta_f must lie in [0, pi], got {self.theta_f}")
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    @property
    def radius(self) -> float:
        return manifold_radius(self.s, self.m, self.gamma)


@dataclass(frozen=True)
class TransferSolution:
    field: FieldSpec
    time: float
    path_length: float
    speed: float
    arc_angle: float
    circle_radius: float


class SweepRow(NamedTuple):
    theta_prime: float
    time: float
    speed: float
    path_length: float


def _half_arc(theta_prime: float, theta_f: float) -> float:
    """``arcsin(sin(theta_f/2) / sin(theta'))``, half the angle swept about ``n'``.

    Written as an arctangent with ``sin^2 a - sin^2 b = sin(a-b) sin(a+b)`` so
    it stays accurate when the ratio is close to 1.
    """
    h = 0.5 * theta_f
    if h == 0.0:
        return 0.0
    gap = np.sin(theta_prime - h) * np.sin(theta_prime + h)
    if gap < -_ZERO_TOL or np.sin(theta_prime) <= 0.0:
        raise UnreachableTargetError(
            f"sin(theta')={np.sin(theta_prime):.6g} < sin(theta_f/2)={np.sin(h):.6g}"
        )
    return float(np.arctan2(np.sin(h), np.sqrt(max(gap, 0.0))))


def path_length(R: float, theta_prime: float, theta_f: float) -> float:
    """Arc length ``2 R sin(theta') arcsin(sin(theta_f/2)/sin(theta'))`` on a sphere of radius R."""
    if not R > 0:
        raise ValueError(f"radius must be positive, got {R}")
    return 2.0 * R * np.sin(theta_prime) * _half_arc(theta_prime, theta_f)


def transfer_time(omega: float, theta_prime: float, theta_f: float) -> float:
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    return 2.0 * _half_arc(theta_prime, theta_f) / omega


def evolution_speed(s, m, field: FieldSpec, gamma: float = 1.0) -> float:
    """Closed-form speed ``omega R sin(theta')`` of ``|m>`` under ``field``."""
    return field.omega * manifold_radius(s, m, gamma) * np.sin(field.theta)


def speed_from_variance(state, H, gamma: float = 1.0) -> float:
    """Anandan-Aharonov speed ``gamma * sqrt(<(H - <H>)^2>)``.

    Computed as the norm of ``(H - <H>)|psi>`` to avoid cancelling
    ``<H^2>`` against ``<H>^2``.
    """
    psi = np.asarray(state, dtype=complex)
    h_psi = np.asarray(H, dtype=complex) @ psi
    mean = np.vdot(psi, h_psi).real
    return float(gamma) * float(np.linalg.norm(h_psi - mean * psi))


def compatible_azimuth(theta_prime: float, theta_f: float, phi_f: float) -> float:
    """Field azimuth at tilt ``theta'`` whose rotation circle passes through the target.

    Solves ``cos(phi' - phi_f) = cos(theta') (1 - cos theta_f) / (sin theta' sin theta_f)``
    and returns the ``phi_f + arccos(...)`` branch, which reaches the target
    after :func:`transfer_time`. The mirror branch ``phi_f - arccos(...)``
    gets there only after the complementary arc. For the degenerate targets
    ``theta_f`` in ``{0, pi}`` the value ``phi_f + pi/2`` is returned.
    """
    h = 0.5 * theta_f
    # cos(theta') sin(h) / (sin(theta') cos(h)) is the same ratio, halved angles
    num = np.cos(theta_prime) * np.sin(h)
    den = np.sin(theta_prime) * np.cos(h)
    if h == 0.0 or abs(den) <= _ZERO_TOL:
        if abs(num) <= _ZERO_TOL:
            return phi_f + HALF_PI
        raise NoCompatibleFieldError(f"theta'={theta_prime:.6g}, theta_f={theta_f:.6g}")
    ratio = num / den
    if abs(ratio) > 1.0 + _ZERO_TOL:
        raise NoCompatibleFieldError(f"cos(phi' - phi_f) would be {ratio:.6g}")
    return phi_f + float(np.arccos(np.clip(ratio, -1.0, 1.0)))


def transfer_at_tilt(problem: TransferProblem, theta_prime: float) -> TransferSolution:
    """The transfer achieved by a field of fixed tilt ``theta'`` and compatible azimuth."""
    half = _half_arc(theta_prime, problem.theta_f)
    phi_prime = compatible_azimuth(theta_prime, problem.theta_f, problem.phi_f)
    field = FieldSpec(problem.omega, theta_prime, phi_prime)
    r = problem.radius * np.sin(theta_prime)
    return TransferSolution(
        field=field,
        time=2.0 * half / problem.omega,
        path_length=2.0 * half * r,
        speed=problem.omega * r,
        arc_angle=2.0 * half,
        circle_radius=r,
    )


def optimal_transfer(problem: TransferProblem) -> TransferSolution:
    """Perpendicular-field solution: geodesic path, time ``theta_f / omega``."""
    R = problem.radius
    field = FieldSpec(problem.omega, HALF_PI, compatible_azimuth(HALF_PI, problem.theta_f, problem.phi_f))
    return TransferSolution(
        field=field,
        time=problem.theta_f / problem.omega,
        path_length=R * problem.theta_f,
        speed=problem.omega * R,
        arc_angle=problem.theta_f,
        circle_radius=R,
    )


def sweep_tilt(problem: TransferProblem, grid_points: int, epsilon: float = 1e-9) -> list[SweepRow]:
    """Scan field tilts from just above the reachability limit up to ``pi/2``.

    The lower end is ``theta_f/2 + epsilon``; rows are ordered by increasing
    tilt, so the last row is the perpendicular (optimal) field.
    """
    if grid_points < 3:
        raise ValueError(f"grid_points must be at least 3, got {grid_points}")
    lo = 0.5 * problem.theta_f + epsilon
    if lo >= HALF_PI:
        raise UnreachableTargetError("no tilt below pi/2 reaches the target")
    rows = []
    for tp in np.linspace(lo, HALF_PI, grid_points):
        sol = transfer_at_tilt(problem, float(tp))
        rows.append(SweepRow(float(tp), sol.time, sol.speed, sol.path_length))
    return rows
