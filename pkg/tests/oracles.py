"""Brute-force reference implementations, deliberately naive.

Nothing here imports the package's counting or statistics code.
"""
from fractions import Fraction
from itertools import combinations, product
import math


def fdot(p, q):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(p, q))


def naive_chains(points, alphas, distinct=False):
    pts = [tuple(Fraction(c) for c in p) for p in points]
    alphas = [Fraction(a) for a in alphas]
    total = 0
    for tup in product(range(len(pts)), repeat=len(alphas) + 1):
        if distinct and len(set(tup)) != len(tup):
            continue
        if all(fdot(pts[tup[j]], pts[tup[j + 1]]) == a for j, a in enumerate(alphas)):
            total += 1
    return total


def naive_chain_list(points, alphas, distinct=False):
    pts = [tuple(Fraction(c) for c in p) for p in points]
    out = []
    for tup in product(range(len(pts)), repeat=len(alphas) + 1):
        if distinct and len(set(tup)) != len(tup):
            continue
        if all(fdot(pts[tup[j]], pts[tup[j + 1]]) == Fraction(a) for j, a in enumerate(alphas)):
            out.append(tuple(pts[i] for i in tup))
    return out


def naive_pairs(points, alpha):
    return sum(1 for p in points for q in points if p != q and fdot(p, q) == Fraction(alpha))


def naive_max_collinear(points):
    """Largest collinear subset, checking every pair-defined line."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    best = min(2, len(pts))
    for p, q in combinations(pts, 2):
        d = [b - a for a, b in zip(p, q)]
        count = 0
        for r in pts:
            e = [b - a for a, b in zip(p, r)]
            # r on line pq iff e is parallel to d
            if all(d[i] * e[j] == d[j] * e[i] for i in range(len(d)) for j in range(len(d))):
                count += 1
        best = max(best, count)
    return best


def naive_max_coplanar(points):
    pts = [tuple(Fraction(c) for c in p) for p in points]
    best = 0
    for p, q, r in combinations(pts, 3):
        u = [b - a for a, b in zip(p, q)]
        w = [b - a for a, b in zip(p, r)]
        nrm = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
        if nrm == (0, 0, 0):
            continue
        count = sum(1 for x in pts if sum(a * (b - c) for a, b, c in zip(nrm, x, p)) == 0)
        best = max(best, count)
    return best or len(pts)


def naive_energy(points, s):
    pts = [tuple(float(Fraction(c)) for c in p) for p in points]
    n = len(pts)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            total += math.dist(pts[i], pts[j]) ** (-s)
    return total / (n * (n - 1) / 2)


def naive_min_sep(points):
    pts = [tuple(float(Fraction(c)) for c in p) for p in points]
    return min(math.dist(p, q) for p, q in combinations(pts, 2))


def naive_incidences(points, lines):
    """lines given as (a, b, c) triples meaning a*x + b*y = c."""
    return sum(1 for (a, b, c) in lines for p in points
               if Fraction(a) * p[0] + Fraction(b) * p[1] == Fraction(c))
