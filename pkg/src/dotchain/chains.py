"""Counting and enumerating dot-product k-chains in a point set.

A k-chain of type ``(a_1, ..., a_k)`` is a tuple ``(R_1, ..., R_{k+1})`` of
points with ``R_j . R_{j+1} == a_j``.  Two counting semantics are offered:

* ``"with-repeats"``: any tuple in ``E**(k+1)``, counted by layered path
  counting over the dot-product adjacency matrices.
* ``"pairwise-distinct"``: all entries distinct.  Counted exactly by Moebius
  inversion over set partitions of the k+1 positions, so the cost stays
  polynomial in ``n`` for fixed ``k``.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .geometry import ChainType, Point, ZeroAlphaError, format_scalar, scalar
from .pointset import PointSet

WITH_REPEATS = "with-repeats"
DISTINCT = "pairwise-distinct"

_FLOAT_EXACT = 2**53
_INT64_EXACT = 2**63 - 1


@dataclass(frozen=True)
class CountReport:
    count: int
    mode: str
    n: int
    chain_type: ChainType
    elapsed: float  # seconds

    @property
    def k(self) -> int:
        return self.chain_type.k

    def to_record(self) -> dict:
        return {
            "count": str(self.count),
            "mode": self.mode,
            "n": self.n,
            "k": self.k,
            "alphas": [format_scalar(a) for a in self.chain_type.alphas],
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


class DotTable:
    """Exact dot products of all ordered pairs, built once per point set."""

    def __init__(self, points: PointSet):
        self.points = points
        self.gram, self.scale = points.gram()
        self._cache: Dict[Fraction, np.ndarray] = {}

    @property
    def n(self) -> int:
        return self.points.n

    def adjacency(self, alpha) -> np.ndarray:
        """Boolean matrix ``A`` with ``A[i, j]`` iff ``P_i . P_j == alpha``."""
        alpha = scalar(alpha)
        if alpha not in self._cache:
            target = alpha * self.scale
            if target.denominator != 1:
                adj = np.zeros((self.n, self.n), dtype=bool)
            else:
                adj = self.gram == int(target)
                adj = np.asarray(adj, dtype=bool)
            self._cache[alpha] = adj
        return self._cache[alpha]

    def values(self) -> Dict[Fraction, int]:
        """Multiplicity of every dot value over ordered pairs ``i != j``."""
        g = self.gram
        off = ~np.eye(self.n, dtype=bool)
        vals, counts = np.unique(g[off], return_counts=True)
        return {Fraction(int(v), self.scale): int(c) for v, c in zip(vals, counts)}


def _table(E) -> DotTable:
    return E if isinstance(E, DotTable) else DotTable(E)


def _check_type(t: ChainType) -> None:
    if not t.allow_zero and any(a == 0 for a in t.alphas):
        raise ZeroAlphaError("zero dot-product target requires allow_zero")


def _pick_dtype(bound: int):
    if bound < _FLOAT_EXACT:
        return np.float64
    if bound < _INT64_EXACT:
        return np.int64
    return object


def count_walks(table: DotTable, t: ChainType) -> int:
    """Layered path count: v_0 = 1, v_j = A_j^T v_{j-1}, answer sum(v_k)."""
    n = table.n
    dtype = _pick_dtype(n ** (t.k + 1))
    v = np.ones(n, dtype=dtype)
    for alpha in t.alphas:
        adj = table.adjacency(alpha).astype(dtype)
        v = adj.T @ v
    total = v.sum()
    if dtype is np.float64:
        return int(round(float(total)))
    return int(total)


def count_chains_dp(E, t: ChainType) -> CountReport:
    """Exact number of (k+1)-tuples, repeats allowed, realizing type ``t``."""
    _check_type(t)
    start = time.perf_counter()
    table = _table(E)
    count = count_walks(table, t)
    return CountReport(count, WITH_REPEATS, table.n, t, time.perf_counter() - start)


# -- pairwise-distinct counting ------------------------------------------

def set_partitions(m: int) -> Iterator[List[int]]:
    """Restricted growth strings of length ``m`` (block label per position)."""
    if m == 0:
        yield []
        return
    labels = [0] * m
    maxes = [0] * m

    def rec(i):
        if i == m:
            yield list(labels)
            return
        top = maxes[i - 1] + 1
        for b in range(top + 1):
            labels[i] = b
            maxes[i] = max(maxes[i - 1], b)
            yield from rec(i + 1)

    yield from rec(1)


def _moebius(labels: Sequence[int]) -> int:
    sizes: Dict[int, int] = {}
    for b in labels:
        sizes[b] = sizes.get(b, 0) + 1
    mu = 1
    for s in sizes.values():
        mu *= (-1) ** (s - 1) * math.factorial(s - 1)
    return mu


_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _quotient_count(table: DotTable, t: ChainType, labels: Sequence[int]) -> int:
    """Number of walks of type ``t`` whose positions agree wherever ``labels`` agree."""
    n = table.n
    m = max(labels) + 1
    dtype = _pick_dtype(n ** m)
    vertex: Dict[int, np.ndarray] = {}
    edges: Dict[Tuple[int, int], np.ndarray] = {}
    for j, alpha in enumerate(t.alphas):
        adj = table.adjacency(alpha)
        u, w = labels[j], labels[j + 1]
        if u == w:
            d = np.diagonal(adj)
            vertex[u] = d if u not in vertex else vertex[u] & d
        else:
            key = (u, w) if u < w else (w, u)
            # dot products are symmetric, so orientation does not matter
            edges[key] = adj if key not in edges else edges[key] & adj
    operands = []
    subs = []
    for b in range(m):
        if b in vertex:
            if not vertex[b].any():
                return 0
            operands.append(vertex[b].astype(dtype))
            subs.append(_LETTERS[b])
    for (u, w), adj in edges.items():
        if not adj.any():
            return 0
        operands.append(adj.astype(dtype))
        subs.append(_LETTERS[u] + _LETTERS[w])
    covered = set("".join(subs))
    free = m - len(covered)
    if not operands:
        return n ** free
    total = np.einsum(",".join(subs) + "->", *operands, optimize="greedy")
    if dtype is np.float64:
        total = int(round(float(total)))
    else:
        total = int(total)
    return total * n ** free


def count_distinct(E, t: ChainType) -> int:
    """Exact number of chains of type ``t`` with pairwise-distinct entries."""
    _check_type(t)
    table = _table(E)
    if table.n < t.k + 1:
        return 0
    total = 0
    for labels in set_partitions(t.k + 1):
        if max(labels) == t.k:
            total += count_walks(table, t)
            continue
        c = _quotient_count(table, t, labels)
        if c:
            total += _moebius(labels) * c
    return total


def count_chains_distinct(E, t: ChainType) -> CountReport:
    start = time.perf_counter()
    table = _table(E)
    count = count_distinct(table, t)
    return CountReport(count, DISTINCT, table.n, t, time.perf_counter() - start)


# -- enumeration -----------------------------------------------------------

def _iter_chains(table: DotTable, t: ChainType, distinct: bool) -> Iterator[Tuple[int, ...]]:
    """Chains as index tuples, in lexicographic order of point indices."""
    n = table.n
    k = t.k
    neighbours = [[np.flatnonzero(row) for row in table.adjacency(a)] for a in t.alphas]
    # alive[j][i]: some walk of the remaining k - j steps starts at i
    alive = [None] * (k + 1)
    alive[k] = np.ones(n, dtype=bool)
    for j in range(k - 1, -1, -1):
        alive[j] = (table.adjacency(t.alphas[j]) & alive[j + 1][None, :]).any(axis=1)
    path: List[int] = []
    used = np.zeros(n, dtype=bool)

    def rec(j):
        if j == k:
            yield tuple(path)
            return
        for q in neighbours[j][path[-1]]:
            if not alive[j + 1][q] or (distinct and used[q]):
                continue
            path.append(int(q))
            used[q] = True
            yield from rec(j + 1)
            used[q] = False
            path.pop()

    for i in np.flatnonzero(alive[0]):
        path.append(int(i))
        used[i] = True
        yield from rec(0)
        used[i] = False
        path.pop()


def enumerate_chains(E, t: ChainType, distinct: bool = True,
                     limit: int = 0) -> Tuple[List[Tuple[Point, ...]], CountReport]:
    """Exact count in the requested mode plus up to ``limit`` witnesses.

    Witnesses come in lexicographic order of point indices in ``E``.
    """
    _check_type(t)
    if limit < 0:
        raise ValueError("limit must be >= 0")
    start = time.perf_counter()
    table = _table(E)
    count = count_distinct(table, t) if distinct else count_walks(table, t)
    witnesses: List[Tuple[Point, ...]] = []
    if limit and count:
        pts = table.points.points
        for idx in _iter_chains(table, t, distinct):
            witnesses.append(tuple(pts[i] for i in idx))
            if len(witnesses) >= limit:
                break
    report = CountReport(count, DISTINCT if distinct else WITH_REPEATS, table.n, t,
                         time.perf_counter() - start)
    return witnesses, report


def count_by_backtracking(E, t: ChainType, distinct: bool) -> int:
    """Count by walking every chain; only practical for small inputs."""
    _check_type(t)
    return sum(1 for _ in _iter_chains(_table(E), t, distinct))


def count_pairs_with_dot(E, alpha, allow_zero: bool = False) -> int:
    """Ordered pairs ``(P, Q)`` with ``P != Q`` and ``P . Q == alpha``."""
    alpha = scalar(alpha)
    if alpha == 0 and not allow_zero:
        raise ZeroAlphaError("zero dot-product target requires allow_zero")
    adj = _table(E).adjacency(alpha)
    return int(adj.sum()) - int(np.trace(adj))


def max_pair_count(E, allow_zero: bool = False) -> Tuple[Optional[Fraction], int]:
    """The most frequent dot value over ordered distinct pairs, and its count.

    Ties go to the smallest value.
    """
    table = _table(E)
    off = ~np.eye(table.n, dtype=bool)
    vals, counts = np.unique(table.gram[off], return_counts=True)
    if not allow_zero:
        keep = vals != 0
        vals, counts = vals[keep], counts[keep]
    if len(vals) == 0:
        return None, 0
    i = int(np.argmax(counts))
    return Fraction(int(vals[i]), table.scale), int(counts[i])
