"""Rotation unitaries built by spectral (Lagrange) interpolation.

For a matrix ``A`` with known, distinct eigenvalues ``l_1..l_n``::

    exp(x A) = sum_m  prod_{k != m} (A - l_k) / (l_m - l_k)  * exp(x l_m)

which is exact for diagonalizable ``A``; no eigenvectors are needed.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .halfint import HalfInt, as_projection, as_spin, projections
from .spin import projection_operator

LAGRANGE_MAX_TWICE_SPIN = 8

_Z = np.array([0.0, 0.0, 1.0])
_Y = np.array([0.0, 1.0, 0.0])


def _differences(eigenvalues) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues as floats, and the matrix of pairwise differences l_m - l_k.

    Half-integer eigenvalues are differenced on their doubled integers.
    """
    if all(isinstance(e, HalfInt) for e in eigenvalues):
        twice = np.array([e.twice for e in eigenvalues], dtype=np.int64)
        return twice / 2.0, (twice[:, None] - twice[None, :]) / 2.0
    vals = np.array([complex(e) if isinstance(e, complex) else float(e) for e in eigenvalues])
    return vals, vals[:, None] - vals[None, :]


def spectral_exponential(generator, eigenvalues: Sequence, scale: complex) -> np.ndarray:
    """``exp(scale * generator)`` by Lagrange interpolation over ``eigenvalues``.

    Parameters
    ----------
    generator : (n, n) array_like
        Diagonalizable matrix whose spectrum is exactly ``eigenvalues``.
    eigenvalues : sequence of HalfInt or numbers
        All ``n`` eigenvalues, pairwise distinct.
    scale : complex
        Multiplier in the exponent, e.g. ``-1j * chi`` for a rotation.

    Returns
    -------
    ndarray
        The ``(n, n)`` complex matrix exponential.

    Notes
    -----
    Rounding error grows with the Lebesgue-type constant of the node set,
    roughly ``eps * binom(2s, s)`` for spin eigenvalues. It stays below 1e-10
    up to s = 6 (unitarity to 1e-12 only up to s = 4) and is useless past
    s = 10; see :func:`exp_spin_generator`.
    """
    a = np.asarray(generator, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"generator must be square, got shape {a.shape}")
    if len(eigenvalues) != n:
        raise ValueError(f"expected {n} eigenvalues, got {len(eigenvalues)}")
    lam, diff = _differences(list(eigenvalues))
    off = ~np.eye(n, dtype=bool)
    if np.any(diff[off] == 0):
        raise ValueError("eigenvalues must be pairwise distinct")

    weights = np.exp(lam * scale)
    if n == 1:
        return np.array([[weights[0]]], dtype=complex)

    # Factors (A - l_k)/w keep the running products near unit norm;
    # the w^(n-1) is folded back into each Lagrange denominator.
    w = max(float(np.max(np.abs(lam - lam.mean()))), 1.0)
    eye = np.eye(n, dtype=complex)
    factors = [(a - lk * eye) / w for lk in lam]
    prefix = [eye]
    for f in factors[:-1]:
        prefix.append(prefix[-1] @ f)
    suffix = [eye]
    for f in reversed(factors[1:]):
        suffix.append(f @ suffix[-1])
    suffix.reverse()

    out = np.zeros((n, n), dtype=complex)
    for m in range(n):
        coef = weights[m] * np.prod(w / diff[m, off[m]])
        out += coef * (prefix[m] @ suffix[m])
    return out


def exp_spin_generator(s, generator, scale: complex) -> np.ndarray:
    """``exp(scale * G)`` for a Hermitian ``G`` with spectrum ``{-s..s}``.

    Uses :func:`spectral_exponential` for ``s <= 4``. Past that the Lagrange
    products drift from unitarity by more than 1e-12, so the exponential is
    assembled from a Hermitian eigendecomposition instead, with the
    eigenvalues snapped to their exact half-integer values.
    """
    s = as_spin(s)
    if s.twice <= LAGRANGE_MAX_TWICE_SPIN:
        return spectral_exponential(generator, projections(s), scale)
    g = np.asarray(generator, dtype=complex)
    _, vecs = np.linalg.eigh(g)
    # eigh sorts ascending, matching -s..s
    lam = np.arange(-s.twice, s.twice + 1, 2) / 2.0
    return (vecs * np.exp(scale * lam)) @ vecs.conj().T


def rotation_operator(s, n, chi: float) -> np.ndarray:
    """The unitary ``exp(-i chi S.n)`` for spin ``s`` about unit axis ``n``."""
    return exp_spin_generator(s, projection_operator(s, n), -1j * chi)


def rotate_eigenstate(s, m, theta: float, phi: float) -> np.ndarray:
    """``exp(-i phi Sz) exp(-i theta Sy) |m>``, the ``S.n(theta, phi)`` eigenstate with eigenvalue m."""
    s = as_spin(s)
    m = as_projection(s, m)
    col = (s.twice - m.twice) // 2
    ry = rotation_operator(s, _Y, theta)
    rz = rotation_operator(s, _Z, phi)
    return rz @ ry[:, col]


def fidelity(a, b) -> float:
    """Overlap modulus ``|<a|b>|``; 1 means equal up to a global phase."""
    return float(abs(np.vdot(a, b)))


def relative_phase(a, b) -> float:
    """``arg <a|b>`` in (-pi, pi]."""
    angle = float(np.angle(np.vdot(a, b)))
    return np.pi if angle == -np.pi else angle


__all__ = [
    "spectral_exponential",
    "exp_spin_generator",
    "rotation_operator",
    "rotate_eigenstate",
    "fidelity",
    "relative_phase",
]
