"""
Configurations rich in chains
=============================

The staircase set puts ceil(k/2) points on the diagonal and the rest on the
line x + y = alpha1.  Its chain count grows like n ** ceil((k+1)/2).  With
zero targets, or in three dimensions, n ** (k+1) is reachable.
"""

from dotchain import (count_chains_distinct, count_chains_dp, generate_axes2d, generate_lenz3d,
                      generate_prop3, generate_random_disk)

for k in (2, 4, 6):
    g = generate_prop3(40, k, 1)
    reps = count_chains_dp(g.set, g.chain_type).count
    dist = count_chains_distinct(g.set, g.chain_type).count
    print(f"k={k} type={[str(a) for a in g.chain_type.alphas]}"
          f" repeats={reps} distinct={dist} promised>={g.promised_count_lower_bound}")

g = generate_axes2d(10, 3)
print("two axes, zero type:", count_chains_dp(g.set, g.chain_type).count, "=", 2 * 5 ** 4)

g = generate_lenz3d(24, 5, [1, 2, 3, 4, 5])
print("3D lines:", g.set.n, "points,", count_chains_dp(g.set, g.chain_type).count, "chains")

E = generate_random_disk(200, seed=1, denom=1000)
print(E.provenance)
