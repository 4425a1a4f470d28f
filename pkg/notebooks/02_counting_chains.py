"""
Counting k-chains
=================

A k-chain of type (a_1, ..., a_k) is a tuple of k+1 points whose consecutive
dot products are a_1, ..., a_k.  Counts come in two flavours: tuples that may
repeat points, and tuples of pairwise-distinct points.
"""

from dotchain import (ChainType, count_chains_distinct, count_chains_dp, count_pairs_with_dot,
                      enumerate_chains, make_pointset)

E = make_pointset([(1, 0), (1, 1), (0, 1)], name="three")
t = ChainType.of(1, 1)

print(count_chains_dp(E, t).to_record())
print(count_chains_distinct(E, t).to_record())

witnesses, report = enumerate_chains(E, t, distinct=True, limit=5)
for w in witnesses:
    print([tuple(str(c) for c in p) for p in w])

# A 1-chain is just an ordered pair with a prescribed dot product.
line = make_pointset([(s, 1 - s) for s in range(2, 10)] + [(1, 1)])
print("pairs with dot 1:", count_pairs_with_dot(line, 1))

# Rational targets work the same way.
R = make_pointset([("1/2", "1/3"), (2, 3), ("4/3", "-1/5"), ("-1/2", 1)])
print(count_chains_dp(R, ChainType.of(2, 2)).count)
