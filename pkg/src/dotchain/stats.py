"""Statistics of point sets: flat richness, radial alignment, incidences,
and the energy/separation pair behind s-adaptability."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .geometry import (GeometryError, LineKey, Point, alpha_line, canonical_line,
                       integer_coordinates, is_origin, radial_direction, scalar)
from .pointset import PointSet

DEFAULT_ENERGY_THRESHOLD = 4.0


@dataclass(frozen=True)
class RichnessReport:
    flat_dim: int
    max_points: int
    flat: str
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class RadialProfile:
    counts: Dict[Point, int]
    max_count: int
    origin_present: bool

    @property
    def no_shared_radial_lines(self) -> bool:
        return self.max_count <= 1


@dataclass(frozen=True)
class AdaptabilityReport:
    s: float
    energy_value: float
    min_sep: float
    sep_threshold: float
    separation_ok: bool
    energy_ok: bool
    energy_threshold: float = DEFAULT_ENERGY_THRESHOLD

    @property
    def adaptable(self) -> bool:
        return self.separation_ok and self.energy_ok


def _primitive(v: Sequence[int]) -> Tuple[int, ...]:
    """Integer direction with gcd 1 and first nonzero entry positive."""
    g = reduce(math.gcd, v, 0)
    v = [x // g for x in v]
    lead = next(x for x in v if x != 0)
    if lead < 0:
        v = [-x for x in v]
    return tuple(v)


def _cross(u: Sequence[int], w: Sequence[int]) -> Tuple[int, int, int]:
    return (u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0])


def _line_richness(E: PointSet) -> RichnessReport:
    rows, _ = integer_coordinates(E.points)
    best: Tuple[int, ...] = (0, 1)
    for i in range(E.n - 1):
        if E.n - i <= len(best):
            break
        groups: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
        pi = rows[i]
        for j in range(i + 1, E.n):
            groups[_primitive([b - a for a, b in zip(pi, rows[j])])].append(j)
        for members in groups.values():
            if len(members) + 1 > len(best):
                best = (i, *members)
    p, q = E.points[best[0]], E.points[best[1]]
    if E.dim == 2:
        flat = str(canonical_line(p, q))
    else:
        direction = radial_direction(tuple(b - a for a, b in zip(p, q)))
        flat = f"through {_fmt(p)} along {_fmt(direction)}"
    return RichnessReport(1, len(best), flat, tuple(sorted(best)))


def _plane_richness(E: PointSet) -> RichnessReport:
    rows, _ = integer_coordinates(E.points)
    planes: Dict[Tuple[int, ...], set] = defaultdict(set)
    n = E.n
    for i in range(n - 2):
        pi = rows[i]
        for j in range(i + 1, n - 1):
            u = [b - a for a, b in zip(pi, rows[j])]
            for l in range(j + 1, n):
                w = [b - a for a, b in zip(pi, rows[l])]
                normal = _cross(u, w)
                if normal == (0, 0, 0):
                    continue
                normal = _primitive(normal)
                key = normal + (sum(a * b for a, b in zip(normal, pi)),)
                planes[key].update((i, j, l))
    if not planes:
        # all points collinear: any plane through their line holds them all
        u = _primitive([b - a for a, b in zip(rows[0], rows[1])])
        other = (1, 0, 0) if _cross(u, (1, 0, 0)) != (0, 0, 0) else (0, 1, 0)
        normal = _primitive(_cross(u, other))
        key = normal + (sum(a * b for a, b in zip(normal, rows[0])),)
        planes[key] = set(range(n))
    key, members = max(planes.items(), key=lambda kv: (len(kv[1]), kv[0]))
    _, scale = integer_coordinates(E.points)
    a, b, c, off = key
    flat = f"{a}*x + {b}*y + {c}*z = {Fraction(off, scale)}"
    return RichnessReport(2, len(members), flat, tuple(sorted(members)))


def _fmt(p: Point) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


def max_flat_richness(E: PointSet, flat_dim: int = 1) -> RichnessReport:
    """Largest number of points of ``E`` on a single line or plane.

    Lines are found by grouping directions from each anchor point; planes
    (3D only) by canonical forms of all non-collinear triples.
    """
    if (E.dim, flat_dim) not in {(2, 1), (3, 1), (3, 2)}:
        raise GeometryError(f"flat richness unsupported for dim={E.dim}, flat_dim={flat_dim}")
    if E.n < flat_dim + 1:
        raise GeometryError(f"need at least {flat_dim + 1} points")
    if flat_dim == 1:
        return _line_richness(E)
    return _plane_richness(E)


def radial_line_profile(E: PointSet) -> RadialProfile:
    """Number of points on each line through the origin (origin excluded)."""
    counts: Dict[Point, int] = defaultdict(int)
    origin = False
    for p in E.points:
        if is_origin(p):
            origin = True
            continue
        counts[radial_direction(p)] += 1
    counts = dict(counts)
    return RadialProfile(counts, max(counts.values(), default=0), origin)


def _int_line(line: LineKey) -> Tuple[int, int, int]:
    den = math.lcm(line.a.denominator, line.b.denominator, line.c.denominator)
    return int(line.a * den), int(line.b * den), int(line.c * den)


def st_incidences(points: PointSet, lines: Iterable[LineKey]) -> int:
    """Exact number of (point, line) pairs with the point on the line."""
    if points.dim != 2:
        raise GeometryError("incidences are counted in the plane")
    lines = set(lines)
    if not lines:
        return 0
    mat, scale = points.integer_matrix()
    int_lines = [_int_line(l) for l in lines]
    biggest = max(max(abs(a), abs(b), abs(c)) for a, b, c in int_lines)
    coord_max = max(abs(int(v)) for v in mat.ravel().tolist())
    dtype = np.int64 if 4 * biggest * max(coord_max, scale) < 2**62 else object
    xs = mat[:, 0].astype(dtype)
    ys = mat[:, 1].astype(dtype)
    total = 0
    for a, b, c in int_lines:
        total += int(np.count_nonzero(a * xs + b * ys == c * scale))
    return total


def alpha_line_family(E: PointSet, alpha) -> List[LineKey]:
    """The alpha-lines of all non-origin points of ``E`` (one per point)."""
    alpha = scalar(alpha)
    return [alpha_line(p, alpha) for p in E.points if not is_origin(p)]


def szemeredi_trotter_bound(n: int, m: int, constant: float = 2.5) -> float:
    return constant * (n ** (2 / 3)) * (m ** (2 / 3)) + n + m


def self_incidences(E: PointSet, alpha) -> int:
    """Points lying on their own alpha-line, i.e. with ``P . P == alpha``."""
    alpha = scalar(alpha)
    return sum(1 for p in E.points if not is_origin(p) and sum(c * c for c in p) == alpha)


# -- energy and separation ---------------------------------------------------

def _pair_sq_distances(E: PointSet, chunk: int = 512):
    """Yield blocks of exact scaled squared distances for pairs ``i < j``.

    Returns ``(blocks, scale**2)``; a squared distance is block value / scale**2.
    """
    mat, scale = E.integer_matrix()
    n = E.n

    def blocks():
        for start in range(0, n - 1, chunk):
            stop = min(start + chunk, n - 1)
            a = mat[start:stop]
            diff = a[:, None, :] - mat[None, :, :]
            d2 = (diff * diff).sum(axis=2)
            rows = np.arange(start, stop)[:, None]
            cols = np.arange(n)[None, :]
            yield d2[cols > rows]

    return blocks(), scale * scale


def energy(E: PointSet, s: float) -> float:
    """Mean of ``|P - Q|**(-s)`` over unordered pairs of distinct points."""
    if E.n < 2:
        raise GeometryError("energy needs at least two points")
    if s <= 0:
        raise ValueError("s must be positive")
    blocks, scale2 = _pair_sq_distances(E)
    total = 0.0
    for d2 in blocks:
        if np.any(d2 == 0):
            raise GeometryError("duplicate points give infinite energy")
        d2f = np.asarray(d2, dtype=np.float64) / float(scale2)
        total += float(np.sum(d2f ** (-s / 2.0)))
    return total / math.comb(E.n, 2)


def min_separation(E: PointSet) -> float:
    if E.n < 2:
        raise GeometryError("separation needs at least two points")
    blocks, scale2 = _pair_sq_distances(E)
    best = min(int(d2.min()) for d2 in blocks)
    return math.sqrt(Fraction(best, scale2))


def is_s_adaptable(E: PointSet, s: float,
                   energy_threshold: float = DEFAULT_ENERGY_THRESHOLD) -> AdaptabilityReport:
    """Check both s-adaptability conditions; raw values are always reported."""
    value = energy(E, s)
    sep = min_separation(E)
    threshold = E.n ** (-1.0 / s)
    return AdaptabilityReport(
        s=float(s),
        energy_value=value,
        min_sep=sep,
        sep_threshold=threshold,
        separation_ok=sep >= threshold,
        energy_ok=value <= energy_threshold,
        energy_threshold=float(energy_threshold),
    )


def unit_square_box(E: PointSet) -> bool:
    return all(0 <= c <= 1 for p in E.points for c in p)
