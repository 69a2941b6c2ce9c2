"""Dense matrix representations of spin-s operators.

The basis is ordered by descending projection, ``|s>, |s-1>, ..., |-s>``, so
that ``sz = diag(s, ..., -s)``. hbar = 1 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .halfint import HalfInt, as_projection, as_spin, basis_index, projections

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class SpinOperatorTriple:
    s: HalfInt
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray

    @property
    def dim(self) -> int:
        return self.s.twice + 1

    def __iter__(self):
        return iter((self.sx, self.sy, self.sz))


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def _build(twice_s: int) -> SpinOperatorTriple:
    s = HalfInt(twice_s)
    ms = np.array([m.twice for m in projections(s)]) / 2.0
    sval = twice_s / 2.0
    # <m+1|S+|m> sits one row above |m> in the descending basis
    raising = np.diag(np.sqrt(sval * (sval + 1) - ms[1:] * (ms[1:] + 1)), k=1).astype(complex)
    lowering = raising.conj().T
    sx = 0.5 * (raising + lowering)
    sy = -0.5j * (raising - lowering)
    sz = np.diag(ms).astype(complex)
    return SpinOperatorTriple(s, _frozen(sx), _frozen(sy), _frozen(sz))


def spin_operators(s) -> SpinOperatorTriple:
    """Return ``(sx, sy, sz)`` for spin ``s`` as read-only complex arrays.

    ``s`` may be anything :meth:`HalfInt.of` accepts. Negative or
    non-half-integer values raise ``ValueError``.
    """
    return _build(as_spin(s).twice)


def basis_eigenstate(s, m) -> np.ndarray:
    """The ``sz`` eigenvector ``|m>`` in the descending-m basis."""
    s = as_spin(s)
    m = as_projection(s, m)
    v = np.zeros(s.twice + 1, dtype=complex)
    v[basis_index(s, m)] = 1.0
    return v


def unit_vector(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def check_unit(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError(f"direction must be a 3-vector, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > UNIT_TOL:
        raise ValueError(f"direction {n} is not a unit vector (|n| = {np.linalg.norm(n)!r})")
    return n


def projection_operator(s, n) -> np.ndarray:
    """``S . n`` for a unit 3-vector ``n``."""
    n = check_unit(n)
    sx, sy, sz = spin_operators(s)
    return n[0] * sx + n[1] * sy + n[2] * sz
