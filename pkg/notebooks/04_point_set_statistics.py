"""
Point-set statistics
====================

Line and plane richness, radial alignment, point-line incidences, and the
energy / separation pair used by s-adaptability.
"""

from fractions import Fraction

from dotchain import (alpha_line_family, count_pairs_with_dot, energy, generate_grid,
                      generate_lenz3d, generate_prop3, generate_random_disk, is_s_adaptable,
                      max_flat_richness, radial_line_profile, st_incidences)

print(max_flat_richness(generate_grid(6), 1))
print(max_flat_richness(generate_prop3(50, 4, 1).set, 1).max_points)
L = generate_lenz3d(30, 2, [1, 2]).set
print("3D: t =", max_flat_richness(L, 1).max_points, "r =", max_flat_richness(L, 2).max_points)

E = generate_random_disk(300, seed=2, denom=1000)
print("radial max:", radial_line_profile(E).max_count)

# Dot-product pairs are incidences between points and their alpha-lines.
D = generate_random_disk(400, seed=5, denom=40)
alpha = Fraction(1, 4)
print(st_incidences(D, alpha_line_family(D, alpha)), count_pairs_with_dot(D, alpha))

print("corner energy at s=2:", energy(generate_grid(2), 2.0))
dense = generate_grid(100).scaled(Fraction(1, 100))
print(is_s_adaptable(dense, 3.0))
print(is_s_adaptable(generate_grid(10).scaled(Fraction(1, 10)), 1.5))
