"""Exact rational points, alpha-lines and radial lines in the plane.

Scalars are :class:`fractions.Fraction` values and points are tuples of
them, so every equality test below is exact.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Scalar = Fraction
Point = Tuple[Fraction, ...]
ScalarLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DimensionMismatch(GeometryError):
    pass


class OriginError(GeometryError):
    """An operation that needs a nonzero point received the origin."""


class SameRadialLine(GeometryError):
    """Two points lie on a common line through the origin."""


class ZeroAlphaError(GeometryError):
    """A zero dot-product target was given without ``allow_zero``."""


def scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Strings must look like ``"p"`` or ``"p/q"``; decimal and float input is
    rejected so that no rounding can sneak in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise GeometryError(f"malformed rational {value!r}; expected 'p' or 'p/q'")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise GeometryError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise TypeError(f"cannot make an exact scalar from {type(value).__name__}")


def format_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def point(*coords: ScalarLike) -> Point:
    if len(coords) == 1 and not isinstance(coords[0], (str, int, Fraction)):
        coords = tuple(coords[0])
    if len(coords) < 2:
        raise GeometryError("points need at least two coordinates")
    return tuple(scalar(c) for c in coords)


def is_origin(p: Point) -> bool:
    return all(c == 0 for c in p)


def dot(a: Point, b: Point) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _require_2d(*pts: Point) -> None:
    for p in pts:
        if len(p) != 2:
            raise DimensionMismatch(f"expected a planar point, got dimension {len(p)}")


def _require_nonzero(*pts: Point) -> None:
    for p in pts:
        if is_origin(p):
            raise OriginError("the origin has no alpha-line or radial direction")


@dataclass(frozen=True)
class LineKey:
    """Canonical form of the planar line ``a*x + b*y = c``.

    The first nonzero of ``(a, b)`` is scaled to 1, so two keys compare
    equal exactly when they describe the same line.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def from_coefficients(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike) -> "LineKey":
        a, b, c = scalar(a), scalar(b), scalar(c)
        if a == 0 and b == 0:
            raise GeometryError("degenerate line: a and b are both zero")
        lead = a if a != 0 else b
        return cls(a / lead, b / lead, c / lead)

    def contains(self, p: Point) -> bool:
        _require_2d(p)
        return self.a * p[0] + self.b * p[1] == self.c

    def __str__(self) -> str:
        return f"{format_scalar(self.a)}*x + {format_scalar(self.b)}*y = {format_scalar(self.c)}"


@dataclass(frozen=True)
class ChainType:
    """Dot-product targets ``(alpha_1, ..., alpha_k)`` of a k-chain."""

    alphas: Tuple[Fraction, ...]
    allow_zero: bool = False

    def __post_init__(self):
        alphas = tuple(scalar(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if not alphas:
            raise GeometryError("a chain type needs k >= 1 targets")
        if not self.allow_zero and any(a == 0 for a in alphas):
            raise ZeroAlphaError("zero dot-product target requires allow_zero")

    @classmethod
    def of(cls, *alphas: ScalarLike, allow_zero: bool = False) -> "ChainType":
        return cls(tuple(alphas), allow_zero=allow_zero)

    @property
    def k(self) -> int:
        return len(self.alphas)

    def reversed(self) -> "ChainType":
        return ChainType(self.alphas[::-1], allow_zero=self.allow_zero)

    def __len__(self) -> int:
        return len(self.alphas)


def alpha_line(a: Point, alpha: ScalarLike) -> LineKey:
    """The line of points whose dot product with ``a`` equals ``alpha``."""
    _require_2d(a)
    _require_nonzero(a)
    return LineKey.from_coefficients(a[0], a[1], scalar(alpha))


def canonical_line(p: Point, q: Point) -> LineKey:
    """The line through two distinct planar points."""
    _require_2d(p, q)
    if p == q:
        raise GeometryError("canonical_line needs two distinct points")
    # normal (q1 - p1, ...) rotated by 90 degrees
    a = q[1] - p[1]
    b = p[0] - q[0]
    return LineKey.from_coefficients(a, b, a * p[0] + b * p[1])


def cross2(p: Point, q: Point) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def same_radial_line(p: Point, q: Point) -> bool:
    _require_2d(p, q)
    _require_nonzero(p, q)
    return cross2(p, q) == 0


def radial_direction(p: Point) -> Point:
    """Canonical direction of the line through ``p`` and the origin.

    Works in any dimension; the first nonzero coordinate is scaled to 1.
    """
    _require_nonzero(p)
    lead = next(c for c in p if c != 0)
    return tuple(c / lead for c in p)


def intersect_alpha_lines(a: Point, alpha: ScalarLike, c: Point, beta: ScalarLike,
                          allow_zero: bool = False) -> Point:
    """Return the unique ``b`` with ``b.a == alpha`` and ``b.c == beta``."""
    alpha, beta = scalar(alpha), scalar(beta)
    _require_2d(a, c)
    _require_nonzero(a, c)
    if not allow_zero and (alpha == 0 or beta == 0):
        raise ZeroAlphaError("zero dot-product target requires allow_zero")
    det = cross2(a, c)
    if det == 0:
        raise SameRadialLine(f"{a} and {c} share a radial line")
    # Cramer's rule on [a1 a2; c1 c2] (x, y) = (alpha, beta)
    x = (alpha * c[1] - a[1] * beta) / det
    y = (a[0] * beta - alpha * c[0]) / det
    return (x, y)


def common_denominator(coords: Iterable[Fraction]) -> int:
    from math import lcm

    den = 1
    for c in coords:
        den = lcm(den, c.denominator)
    return den


def integer_coordinates(points: Sequence[Point]) -> Tuple[list, int]:
    """Scale points by the least common denominator.

    Returns ``(rows, scale)`` where ``rows`` are lists of Python ints and
    ``scale * p == row`` for every point.
    """
    scale = common_denominator(c for p in points for c in p)
    rows = [[int(c * scale) for c in p] for p in points]
    return rows, scale
