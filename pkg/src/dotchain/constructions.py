"""Point configurations that are rich in dot-product chains, plus baselines.

Every generator is deterministic in its arguments and records them in the
point set's provenance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .geometry import ChainType, GeometryError, ZeroAlphaError, format_scalar, scalar
from .pointset import PointSet

RNG_NAME = "numpy.random.PCG64"


@dataclass(frozen=True)
class GeneratedConfig:
    set: PointSet
    chain_type: Optional[ChainType] = None
    promised_count_lower_bound: Optional[int] = None


def staircase_alphas(k: int, alpha1) -> ChainType:
    """``(a, a, 2a, 2a, 3a, ...)`` truncated to length ``k``."""
    alpha1 = scalar(alpha1)
    return ChainType(tuple(((j // 2) + 1) * alpha1 for j in range(k)))


def generate_prop3(n: int, k: int, alpha1=1) -> GeneratedConfig:
    """Staircase construction with about ``n**ceil((k+1)/2)`` k-chains.

    The fixed points ``(m, m)``, ``m = 1..ceil(k/2)``, sit on the diagonal
    and the remaining points lie on the line ``x + y = alpha1``.  Since
    ``(m, m) . P == m * alpha1`` for every point of that line, the odd chain
    slots range freely over the line while the even slots are pinned.
    """
    alpha1 = scalar(alpha1)
    if k < 2:
        raise GeometryError("prop3 needs k >= 2")
    if n <= k:
        raise GeometryError(f"prop3 needs n > k (got n={n}, k={k})")
    if alpha1 == 0:
        raise ZeroAlphaError("alpha1 must be nonzero")
    fixed_count = (k + 1) // 2
    on_line = n - fixed_count
    fixed = [(Fraction(m), Fraction(m)) for m in range(1, fixed_count + 1)]
    line = [(Fraction(t), alpha1 - t) for t in range(2, on_line + 2)]
    pts = fixed + line
    prov = {"generator": "prop3", "n": n, "k": k, "alpha1": format_scalar(alpha1)}
    odd_slots = (k + 2) // 2  # odd indices in 1..k+1
    return GeneratedConfig(
        PointSet(f"prop3-n{n}-k{k}", tuple(pts), prov),
        staircase_alphas(k, alpha1),
        on_line ** odd_slots,
    )


def generate_axes2d(n: int, k: int) -> GeneratedConfig:
    """``n/2`` points on each coordinate axis; every cross-axis dot is 0."""
    if n % 2 or n < 4:
        raise GeometryError(f"axes2d needs an even n >= 4 (got {n})")
    if k < 1:
        raise GeometryError("k must be >= 1")
    half = n // 2
    pts = [(Fraction(i), Fraction(0)) for i in range(1, half + 1)]
    pts += [(Fraction(0), Fraction(i)) for i in range(1, half + 1)]
    prov = {"generator": "axes2d", "n": n, "k": k}
    return GeneratedConfig(
        PointSet(f"axes2d-n{n}-k{k}", tuple(pts), prov),
        ChainType((Fraction(0),) * k, allow_zero=True),
        2 * half ** (k + 1),
    )


def lenz_x_coordinates(alphas: Sequence[Fraction]) -> list:
    xs = [Fraction(1)]
    for a in alphas:
        xs.append(a / xs[-1])
    return xs


def generate_lenz3d(n: int, k: int, alphas) -> GeneratedConfig:
    """k+1 lines in R^3 whose consecutive cross-line dot products are fixed.

    Line ``j`` (1-based) has constant x-coordinate ``x_j`` with ``x_1 = 1``
    and ``x_{j+1} = alpha_j / x_j``.  Odd lines vary z (with y = 0), even
    lines vary y (with z = 0), so ``(x_j, 0, z) . (x_{j+1}, y, 0) == alpha_j``.
    Points shared by two lines (possible when ``x_j == x_{j+2}``) are kept
    once.
    """
    t = alphas if isinstance(alphas, ChainType) else ChainType(tuple(alphas))
    if any(a == 0 for a in t.alphas):
        raise ZeroAlphaError("lenz3d needs nonzero targets")
    if t.k != k:
        raise GeometryError(f"chain type has length {t.k}, expected k={k}")
    if n < k + 1:
        raise GeometryError(f"lenz3d needs n >= k+1 (got n={n}, k={k})")
    per_line = n // (k + 1)
    xs = lenz_x_coordinates(t.alphas)
    pts = []
    seen = set()
    zero = Fraction(0)
    for j, x in enumerate(xs, start=1):
        for v in range(1, per_line + 1):
            p = (x, zero, Fraction(v)) if j % 2 else (x, Fraction(v), zero)
            if p not in seen:
                seen.add(p)
                pts.append(p)
    prov = {"generator": "lenz3d", "n": n, "k": k,
            "alphas": [format_scalar(a) for a in t.alphas]}
    return GeneratedConfig(
        PointSet(f"lenz3d-n{n}-k{k}", tuple(pts), prov),
        t,
        per_line ** (k + 1),
    )


def generate_random_disk(n: int, seed: int = 0, denom: int = 1000, dim: int = 2) -> PointSet:
    """``n`` distinct non-origin points ``i/denom`` inside the closed unit ball.

    Integers ``i`` are drawn uniformly from ``[-denom, denom]`` with a
    PCG64 stream seeded by ``seed``; duplicates, the origin and points
    outside the ball are rejected.
    """
    if n < 1 or denom < 1:
        raise GeometryError("random_disk needs n >= 1 and denom >= 1")
    # rough lattice-point count of the ball, minus the origin
    capacity = math.pi ** (dim / 2) / math.gamma(dim / 2 + 1) * denom ** dim
    if n > 0.9 * capacity:
        raise GeometryError(f"cannot place {n} distinct points with denom={denom}")
    rng = np.random.Generator(np.random.PCG64(seed))
    seen = set()
    rows = []
    r2 = denom * denom
    while len(rows) < n:
        batch = rng.integers(-denom, denom + 1, size=(2 * (n - len(rows)) + 16, dim))
        for row in batch.tolist():
            key = tuple(row)
            if key in seen or not any(key) or sum(v * v for v in key) > r2:
                continue
            seen.add(key)
            rows.append(key)
            if len(rows) == n:
                break
    pts = tuple(tuple(Fraction(v, denom) for v in row) for row in rows)
    prov = {"generator": "random_disk", "n": n, "seed": seed, "denom": denom,
            "dim": dim, "rng": RNG_NAME}
    return PointSet(f"random_disk-n{n}-seed{seed}", pts, prov)


def generate_grid(side: int) -> PointSet:
    """The integer grid ``{1..side}^2``."""
    if side < 2:
        raise GeometryError("grid side must be >= 2")
    pts = tuple((Fraction(x), Fraction(y)) for x in range(1, side + 1) for y in range(1, side + 1))
    return PointSet(f"grid-{side}", pts, {"generator": "grid", "side": side})


GENERATORS = {
    "prop3": generate_prop3,
    "axes2d": generate_axes2d,
    "lenz3d": generate_lenz3d,
    "random_disk": generate_random_disk,
    "grid": generate_grid,
}
