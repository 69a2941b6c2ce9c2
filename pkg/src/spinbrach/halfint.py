"""Exact half-integer quantum numbers.

Spin ``s`` and projection ``m`` are stored as the integer ``2s`` (``2m``) so
that eigenvalue bookkeeping and Lagrange denominators stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import numbers

MAX_TWICE_SPIN = 100  # s <= 50, dimension 101


@dataclass(frozen=True, order=True)
class HalfInt:
    twice: int

    def __post_init__(self):
        if isinstance(self.twice, bool) or not isinstance(self.twice, numbers.Integral):
            raise TypeError(f"twice must be an integer, got {self.twice!r}")
        object.__setattr__(self, "twice", int(self.twice))

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce ``value`` (int, float, Fraction, str or HalfInt) to a HalfInt.

        Strings may be decimal (``"1.5"``) or fractional (``"3/2"``).
        Raises ``ValueError`` if the value is not an integer multiple of 1/2.
        """
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            text = value.strip()
            try:
                frac = Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"cannot parse {value!r} as a half-integer") from None
        elif isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        elif isinstance(value, numbers.Rational):
            frac = Fraction(value)
        elif isinstance(value, numbers.Real):
            twice = 2.0 * float(value)
            if not twice == round(twice):
                raise ValueError(f"{value!r} is not a multiple of 1/2")
            frac = Fraction(round(twice), 2)
        else:
            raise TypeError(f"cannot interpret {type(value).__name__} as a half-integer")
        twice = 2 * frac
        if twice.denominator != 1:
            raise ValueError(f"{value!r} is not a multiple of 1/2")
        return cls(int(twice))

    def __float__(self) -> float:
        return self.twice / 2.0

    @property
    def value(self) -> float:
        return self.twice / 2.0

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def as_spin(s) -> HalfInt:
    """Validate and coerce a spin quantum number (0 <= s <= 50)."""
    s = HalfInt.of(s)
    if s.twice < 0:
        raise ValueError(f"spin must be non-negative, got {s}")
    if s.twice > MAX_TWICE_SPIN:
        raise ValueError(f"spin {s} exceeds the dense-matrix cap s <= {MAX_TWICE_SPIN // 2}")
    return s


def as_projection(s: HalfInt, m) -> HalfInt:
    m = HalfInt.of(m)
    if abs(m.twice) > s.twice or (s.twice - m.twice) % 2:
        raise ValueError(f"projection m={m} is not one of -s..s for s={s}")
    return m


def projections(s: HalfInt) -> tuple[HalfInt, ...]:
    """All projections of ``s`` in descending order ``s, s-1, ..., -s``."""
    return tuple(HalfInt(t) for t in range(s.twice, -s.twice - 1, -2))


def basis_index(s: HalfInt, m: HalfInt) -> int:
    """Position of ``|m>`` in the descending-m basis."""
    return (s.twice - m.twice) // 2
