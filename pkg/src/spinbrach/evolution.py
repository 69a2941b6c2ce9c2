"""Exact evolution of a spin in a static magnetic field, ``H = omega S.n'``.

An ``S_z`` eigenstate ``|m>`` evolves rigidly on its own rotational manifold:
at time ``t`` it is ``|psi_m(theta, phi)>`` up to a global phase, with
``(theta, phi)`` the image of the z axis rotated by ``omega t`` about ``n'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import OffManifoldError
from .halfint import HalfInt, as_projection, as_spin
from .rotor import exp_spin_generator, fidelity, relative_phase, rotate_eigenstate
from .spin import basis_eigenstate, projection_operator, unit_vector

TWO_PI = 2.0 * np.pi
RESIDENCY_TOL = 1e-8
ANGLE_SLACK = 1e-9


def clamp_polar(theta: float) -> float:
    """Snap a polar angle within ``ANGLE_SLACK`` outside ``[0, pi]`` onto the interval.

    Lets decimal renderings of pi (``3.1415926536``) through unchanged in meaning.
    """
    theta = float(theta)
    if -ANGLE_SLACK <= theta < 0.0:
        return 0.0
    if np.pi < theta <= np.pi + ANGLE_SLACK:
        return float(np.pi)
    return theta


@dataclass(frozen=True)
class FieldSpec:
    """Field strength ``omega`` (frequency units) and direction ``(theta, phi)``.

    ``phi`` is reduced into ``[0, 2 pi)`` on construction.
    """

    omega: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not float(self.omega) > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        object.__setattr__(self, "theta", clamp_polar(self.theta))
        if not 0.0 <= float(self.theta) <= np.pi:
            raise ValueError(f"field polar angle must lie in [0, pi], got {self.theta}")
        if not np.isfinite(self.phi):
            raise ValueError(f"field azimuth must be finite, got {self.phi}")
        object.__setattr__(self, "omega", float(self.omega))
        phi = float(self.phi) % TWO_PI
        object.__setattr__(self, "phi", 0.0 if phi == TWO_PI else phi)

    @property
    def direction(self) -> np.ndarray:
        return unit_vector(self.theta, self.phi)


@dataclass(frozen=True)
class EvolutionSample:
    t: float
    state: np.ndarray
    predicted_theta: float
    predicted_phi: float
    phase_beta: float
    residency_fidelity: float


def field_hamiltonian(s, field: FieldSpec) -> np.ndarray:
    return field.omega * projection_operator(s, field.direction)


def propagator(s, field: FieldSpec, t: float) -> np.ndarray:
    """``exp(-i H t)``, interpolated over the spectrum ``{omega m}``."""
    if t < 0:
        raise ValueError(f"time must be non-negative, got {t}")
    gen = projection_operator(s, field.direction)
    # exp(-i omega t S.n') keeps the exact half-integer nodes of S.n'
    return exp_spin_generator(s, gen, -1j * field.omega * t)


def evolve(state, s, field: FieldSpec, t: float) -> np.ndarray:
    """Evolve ``state`` for time ``t`` under ``omega S.n'``."""
    s = as_spin(s)
    state = np.asarray(state, dtype=complex)
    if state.shape != (s.twice + 1,):
        raise ValueError(f"state has shape {state.shape}, expected ({s.twice + 1},)")
    return propagator(s, field, t) @ state


def evolved_angles(field: FieldSpec, t: float) -> tuple[float, float]:
    """Direction ``(theta, phi)`` reached by the z axis after rotating ``omega t`` about ``n'``.

    ``sin(theta/2) = sin(theta') |sin(omega t / 2)|`` and
    ``phi = phi' - atan2(sign * cos(omega t/2), cos(theta') |sin(omega t/2)|)``
    with ``sign`` the sign of ``sin(omega t/2)``. This is the branch that
    tends to ``phi' - pi/2`` as ``t -> 0+`` and has period ``2 pi / omega``.
    At ``omega t = 0 mod 2 pi`` the state sits on the pole and
    ``phi' - pi/2`` is returned.
    """
    if t < 0:
        raise ValueError(f"time must be non-negative, got {t}")
    half = 0.5 * field.omega * t
    sh, ch = np.sin(half), np.cos(half)
    st, ct = np.sin(field.theta), np.cos(field.theta)
    theta = 2.0 * np.arcsin(min(1.0, st * abs(sh)))
    if abs(sh) < 1e-15:
        return theta, field.phi - 0.5 * np.pi
    sign = 1.0 if sh > 0 else -1.0
    phi = field.phi - np.arctan2(sign * ch, ct * abs(sh))
    return float(theta), float(phi)


def _spin_of(state) -> HalfInt:
    return HalfInt(len(state) - 1)


def global_phase(state, theta: float, phi: float, m) -> float:
    """``arg <psi_m(theta, phi)|state>`` in (-pi, pi].

    Raises :class:`OffManifoldError` unless the state equals
    ``psi_m(theta, phi)`` up to a phase (overlap modulus within 1e-8 of 1).
    """
    state = np.asarray(state, dtype=complex)
    s = _spin_of(state)
    m = as_projection(s, m)
    ref = rotate_eigenstate(s, m, theta, phi)
    f = fidelity(ref, state)
    if f < 1.0 - RESIDENCY_TOL:
        raise OffManifoldError(f)
    return relative_phase(ref, state)


def trace(s, m, field: FieldSpec, times: Iterable[float]) -> list[EvolutionSample]:
    """Evolve ``|m>`` and compare against the predicted manifold point at each time."""
    s = as_spin(s)
    m = as_projection(s, m)
    start = basis_eigenstate(s, m)
    samples = []
    for t in times:
        t = float(t)
        psi = evolve(start, s, field, t)
        theta, phi = evolved_angles(field, t)
        ref = rotate_eigenstate(s, m, theta, phi)
        samples.append(
            EvolutionSample(
                t=t,
                state=psi,
                predicted_theta=theta,
                predicted_phi=phi,
                phase_beta=relative_phase(ref, psi),
                residency_fidelity=fidelity(ref, psi),
            )
        )
    return samples
