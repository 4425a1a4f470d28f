"""
Alpha-lines and radial lines
============================

The points whose dot product with a fixed point ``A`` equals ``alpha`` form a
line.  Everything here is exact: coordinates are fractions.
"""

from fractions import Fraction

from dotchain import (SameRadialLine, alpha_line, canonical_line, dot, intersect_alpha_lines,
                      point, same_radial_line)

A = point(1, 1)
print("alpha-line of (1,1) at alpha=1:", alpha_line(A, 1))

# Points on the same line through the origin can have coincident alpha-lines.
print(alpha_line(point(2, 2), 2) == alpha_line(A, 1))
print(same_radial_line(point(2, 2), A))

# Off a common radial line, two alpha-lines meet in exactly one point.
C = point(3, -1)
B = intersect_alpha_lines(A, Fraction(5, 2), C, 7)
print("B =", B, "checks:", dot(B, A), dot(B, C))

try:
    intersect_alpha_lines(A, 1, point(-4, -4), 3)
except SameRadialLine as exc:
    print("singular system:", exc)

# Different points give different alpha-lines for the same alpha.
grid = [point(x, y) for x in range(-5, 6) for y in range(-5, 6) if (x, y) != (0, 0)]
print(len(grid), "points,", len({alpha_line(p, 1) for p in grid}), "distinct alpha-lines")

print(canonical_line(point(2, 0), point(0, 2)))
