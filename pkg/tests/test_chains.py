import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dotchain import (ChainType, DotTable, PointSet, ZeroAlphaError, count_by_backtracking,
                      count_chains_distinct, count_chains_dp, count_distinct, count_pairs_with_dot,
                      enumerate_chains, generate_prop3, make_pointset, max_pair_count)
from dotchain.chains import set_partitions

from oracles import fdot, naive_chain_list, naive_chains, naive_pairs

A, B, C = (1, 0), (1, 1), (0, 1)
coord = st.sampled_from([Fraction(v) for v in (-2, -1, 0, 1, 2)] + [Fraction(1, 2), Fraction(-3, 2)])


@st.composite
def chain_instances(draw, max_n=7, max_k=3):
    dim = draw(st.sampled_from([2, 3]))
    pts = draw(st.lists(st.tuples(*[coord] * dim), min_size=1, max_size=max_n, unique=True))
    k = draw(st.integers(1, max_k))
    dots = sorted({fdot(p, q) for p in pts for q in pts} - {0}) or [Fraction(1)]
    alphas = draw(st.lists(st.sampled_from(dots + [Fraction(7, 3)]), min_size=k, max_size=k))
    return make_pointset(pts), ChainType(tuple(alphas))


def test_three_point_example():
    E = make_pointset([A, B, C])
    t = ChainType.of(1, 1)
    assert count_chains_dp(E, t).count == 12
    witnesses, report = enumerate_chains(E, t, distinct=True, limit=10)
    assert report.count == 2
    assert witnesses == [tuple(map(lambda p: tuple(map(Fraction, p)), w)) for w in [(A, B, C), (C, B, A)]]


def test_prop3_hinge_counts():
    g = generate_prop3(10, 2, 1)
    assert count_chains_dp(g.set, g.chain_type).count == 90
    assert enumerate_chains(g.set, g.chain_type, distinct=True)[1].count == 72


def test_no_matching_pair_gives_empty_result():
    E = make_pointset([A, B, C])
    witnesses, report = enumerate_chains(E, ChainType.of(5), distinct=True, limit=3)
    assert report.count == 0 and witnesses == []


def test_limit_zero_emits_nothing():
    g = generate_prop3(10, 2, 1)
    witnesses, report = enumerate_chains(g.set, g.chain_type, distinct=False, limit=0)
    assert witnesses == [] and report.count == 90


def test_witnesses_are_lexicographic_prefix():
    g = generate_prop3(8, 2, 1)
    index = {p: i for i, p in enumerate(g.set.points)}
    expected = sorted(naive_chain_list(g.set.points, g.chain_type.alphas, distinct=True),
                      key=lambda w: [index[p] for p in w])
    witnesses, _ = enumerate_chains(g.set, g.chain_type, distinct=True, limit=7)
    assert witnesses == expected[:7]


def test_pairs_examples():
    assert count_pairs_with_dot(make_pointset([(1, 0), (1, 1), (2, 0)]), 1) == 2
    n = 8
    E = make_pointset([(t, 1 - t) for t in range(2, n + 2)] + [(1, 1)])
    assert count_pairs_with_dot(E, 1) == 2 * n == naive_pairs(E.points, 1)
    assert count_pairs_with_dot(E, 99) == 0


def test_zero_alpha_rejected_by_default():
    E = make_pointset([A, B])
    with pytest.raises(ZeroAlphaError):
        count_pairs_with_dot(E, 0)
    assert count_pairs_with_dot(E, 0, allow_zero=True) == 0
    with pytest.raises(ZeroAlphaError):
        ChainType((Fraction(0),))


def test_origin_is_an_ordinary_member():
    E = make_pointset([(0, 0), A, B, C])
    t = ChainType.of(1, 1)
    assert count_chains_dp(E, t).count == 12
    assert count_chains_dp(make_pointset([(0, 0), A]), ChainType.of(0, allow_zero=True)).count == 3


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(m)) for m in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


def test_count_report_record():
    g = generate_prop3(10, 2, 1)
    rec = count_chains_dp(g.set, g.chain_type).to_record()
    assert rec["count"] == "90" and rec["mode"] == "with-repeats"
    assert rec["n"] == 10 and rec["k"] == 2 and rec["alphas"] == ["1", "1"]
    assert isinstance(rec["elapsed_ms"], float)
    json.dumps(rec)


def test_big_counts_stay_exact():
    # n**(k+1) exceeds int64 here, so the object-array path is exercised
    g = generate_prop3(200, 2, 1)
    t = ChainType.of(*([1] * 8))
    count = count_chains_dp(g.set, t).count
    # walks alternate fixed point / line point: starting on the line gives 199^5,
    # starting at the fixed point 199^4
    assert count == 199 ** 5 + 199 ** 4
    assert count_distinct(g.set, ChainType.of(1, 1, 1)) == 0


def test_rational_coordinates_and_targets():
    E = make_pointset([("1/2", "1/3"), (2, 3), ("4/3", "-1/5"), ("-1/2", 1)])
    t = ChainType.of(2, 2)
    assert count_chains_dp(E, t).count == naive_chains(E.points, t.alphas)
    assert count_distinct(E, t) == naive_chains(E.points, t.alphas, distinct=True)


@settings(max_examples=150, deadline=None)
@given(chain_instances())
def test_oracle_equivalence(inst):
    E, t = inst
    assert count_chains_dp(E, t).count == naive_chains(E.points, t.alphas)
    assert count_distinct(E, t) == naive_chains(E.points, t.alphas, distinct=True)
    assert count_by_backtracking(E, t, distinct=True) == naive_chains(E.points, t.alphas, True)


@settings(max_examples=80, deadline=None)
@given(chain_instances())
def test_distinct_never_exceeds_repeats(inst):
    E, t = inst
    assert count_chains_distinct(E, t).count <= count_chains_dp(E, t).count


@settings(max_examples=80, deadline=None)
@given(chain_instances(max_n=6), st.tuples(coord, coord, coord))
def test_monotone_under_adding_a_point(inst, extra):
    E, t = inst
    extra = extra[:E.dim]
    if extra in E.points:
        return
    F = E.with_point(extra)
    assert count_chains_dp(F, t).count >= count_chains_dp(E, t).count
    assert count_distinct(F, t) >= count_distinct(E, t)


@settings(max_examples=80, deadline=None)
@given(chain_instances())
def test_reversal_symmetry(inst):
    E, t = inst
    r = t.reversed()
    assert count_chains_dp(E, t).count == count_chains_dp(E, r).count
    assert count_distinct(E, t) == count_distinct(E, r)


@settings(max_examples=80, deadline=None)
@given(chain_instances(max_k=1))
def test_single_step_matches_pair_count(inst):
    E, t = inst
    alpha = t.alphas[0]
    self_pairs = sum(1 for p in E.points if fdot(p, p) == alpha)
    assert count_chains_dp(E, t).count == count_pairs_with_dot(E, alpha) + self_pairs
    assert count_distinct(E, t) == count_pairs_with_dot(E, alpha)


@settings(max_examples=60, deadline=None)
@given(chain_instances(max_k=2))
def test_hinge_sanity(inst):
    E, t = inst
    if t.k != 2:
        return
    assert count_chains_dp(E, t).count <= 3 * E.n ** 2


def test_max_pair_count():
    E = make_pointset([(1, 0), (1, 1), (0, 1), (2, 0)])
    alpha, count = max_pair_count(E)
    assert (alpha, count) == (1, 4)
    assert count == naive_pairs(E.points, alpha)


def test_dot_table_reused():
    g = generate_prop3(12, 4, 1)
    table = DotTable(g.set)
    assert count_chains_dp(table, g.chain_type).count == count_chains_dp(g.set, g.chain_type).count
