import math
from fractions import Fraction as F

import numpy as np
import pytest

from dotchain import BoundSpec, GeometryError, evaluate_bound, fit_growth_exponent, verify_family
from dotchain.bounds import BOUND_IDS, bound_terms


def n_exp(bid, **params):
    params.setdefault("n", 100)
    return evaluate_bound(BoundSpec(bid, params)).n_exponent


def test_main_theorem_value():
    v = evaluate_bound(BoundSpec("thm-main", {"n": 100, "k": 6}))
    assert v.n_exponent == F(14, 3)
    assert v.value == pytest.approx(100 ** (14 / 3), rel=1e-12)


def test_prop_lower_value():
    v = evaluate_bound(BoundSpec("prop-lower", {"n": 100, "k": 6}))
    assert v.n_exponent == 4
    assert v.value == pytest.approx(1e8, rel=1e-12)


def test_small_k_reductions():
    assert n_exp("thm-main", k=1) == F(4, 3) == n_exp("single-dot")
    assert n_exp("thm-main", k=2) == 2 == n_exp("hinge")


@pytest.mark.parametrize("k", range(1, 31))
def test_lower_never_exceeds_upper(k):
    lower, upper = n_exp("prop-lower", k=k), n_exp("thm-main", k=k)
    assert lower <= upper
    if lower == upper:
        assert k in (1, 2)


@pytest.mark.parametrize("k", range(3, 31))
def test_starlike_beats_general(k):
    assert n_exp("cor-starlike", k=k, eps=F(1, 3) - F(1, 1000)) <= n_exp("thm-main", k=k)


def test_starlike_cases():
    assert n_exp("cor-starlike", k=3) == 2
    assert n_exp("cor-starlike", k=4, eps=F(1, 100)) == F(7, 3) + F(1, 100)
    assert n_exp("cor-starlike", k=5) == 3


@pytest.mark.parametrize("k", range(1, 16))
@pytest.mark.parametrize("n", [16, 1000, 10 ** 6])
def test_sadapt_is_lightlines_with_sqrt_t(k, n):
    a = evaluate_bound(BoundSpec("cor-sadapt", {"n": n, "k": k, "s": 2}))
    b = evaluate_bound(BoundSpec("cor-lightlines", {"n": n, "k": k, "t": math.sqrt(n)}))
    assert a.value == pytest.approx(b.value, rel=1e-9)
    assert [t.in_n() for t in a.terms] == [t.in_n(t_power=F(1, 2)) for t in b.terms]


def test_lightlines_exponents():
    (term,) = bound_terms(BoundSpec("cor-lightlines", {"n": 10, "k": 2, "t": 3}))
    assert (term.log2n, term.t, term.n) == (F(2), F(1), F(4, 3))
    (term,) = bound_terms(BoundSpec("cor-lightlines", {"n": 10, "k": 3, "t": 3}))
    assert (term.log2n, term.t, term.n) == (0, 0, F(24, 9))
    v = evaluate_bound(BoundSpec("cor-lightlines", {"n": 1024, "k": 2, "t": 5}))
    assert v.value == pytest.approx(10 ** 2 * 5 * 1024 ** (4 / 3), rel=1e-12)


def test_hidim_terms_and_sum():
    spec = BoundSpec("cor-hidim", {"n": 1000, "k": 2, "r": 50, "t": 10, "d": 3, "eps": 0})
    v = evaluate_bound(spec)
    assert len(v.terms) == 3
    assert v.terms[1].n == F(9 * 3, 15) and v.terms[1].t == F(12, 15)
    vals = [1000 * 10 ** 2, 1000 ** 1.8 * 10 ** 0.8, 1000 * 50]
    assert v.value == pytest.approx(max(vals), rel=1e-12)
    assert v.total == pytest.approx(sum(vals), rel=1e-12)
    one = evaluate_bound(BoundSpec("cor-hidim", {"n": 1000, "k": 4, "r": 50, "t": 10, "d": 3}))
    assert one.terms[0].n == 2 and one.terms[0].r == 1 and one.terms[0].t == 1
    assert one.terms[1].n == F(9 * 3 + 27 - 6, 15) + F(1, 100)
    zero = evaluate_bound(BoundSpec("cor-hidim", {"n": 1000, "k": 3, "r": 50, "t": 10, "d": 4}))
    assert zero.terms[0].t == 2 and zero.terms[1].n == F(13 * 2 + 72 - 8, 21) + F(1, 100)


def test_fk_distance():
    assert n_exp("fk-distance", k=3) == 2
    assert n_exp("fk-distance", k=4, eps=0) == 1 + F(4, 3)
    assert n_exp("fk-distance", k=6) == 3
    assert n_exp("fk-distance", k=5) == 3


def test_missing_params():
    with pytest.raises(GeometryError):
        BoundSpec("cor-lightlines", {"n": 10, "k": 2})
    with pytest.raises(GeometryError):
        BoundSpec("nope", {"n": 10})
    with pytest.raises(GeometryError):
        BoundSpec("thm-main", {"n": 10, "k": 0})


@pytest.mark.parametrize("bid", BOUND_IDS)
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 9])
def test_monotone_in_n_t_r(bid, k):
    def value(n, t, r):
        return evaluate_bound(BoundSpec(bid, {"n": n, "k": k, "t": t, "r": r, "d": 3, "s": 1.5})).value

    grid = [2, 8, 64, 512, 4096]
    for i in range(len(grid) - 1):
        lo, hi = grid[i], grid[i + 1]
        assert value(hi, 4, 16) >= value(lo, 4, 16)
        assert value(512, hi, 16) >= value(512, lo, 16)
        assert value(512, 4, hi) >= value(512, 4, lo)


def test_fit_exact_power_law():
    ns = [10, 20, 40, 80, 160]
    fit = fit_growth_exponent([(n, n ** 2) for n in ns])
    assert fit.slope == pytest.approx(2.0, abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    for a, c in [(3, 7), (1, 1000), (5, 2)]:
        assert fit_growth_exponent([(n, c * n ** a) for n in ns]).slope == pytest.approx(a, abs=1e-9)


def test_fit_matches_numpy():
    samples = [(5, 30), (9, 200), (17, 900), (40, 3000)]
    fit = fit_growth_exponent(samples)
    slope, icpt = np.polyfit(np.log([5, 9, 17, 40]), np.log([30, 200, 900, 3000]), 1)
    assert fit.slope == pytest.approx(slope) and fit.intercept == pytest.approx(icpt)
    assert 0 <= fit.r_squared <= 1


def test_fit_errors():
    with pytest.raises(ValueError):
        fit_growth_exponent([(1, 1), (2, 2)])
    with pytest.raises(ValueError):
        fit_growth_exponent([(1, 1), (2, 0), (3, 3)])
    with pytest.raises(ValueError):
        fit_growth_exponent([(1, 1), (3, 2), (2, 3)])


def test_fit_constant_counts():
    fit = fit_growth_exponent([(10, 4), (20, 4), (40, 4)])
    assert fit.slope == pytest.approx(0, abs=1e-12) and fit.r_squared == 1.0


def test_verify_prop3_k4_distinct():
    rep = verify_family("prop3", 4, [40, 80, 160, 320], direction="lower", mode="distinct")
    assert abs(rep.fit.slope - 3.0) <= 0.15
    assert rep.target_exponent == 3 and rep.passed


def test_verify_hinge_upper():
    rep = verify_family("prop3", 2, [40, 80, 160, 320], bound="hinge", direction="upper")
    assert rep.passed and rep.target_exponent == 2
    assert rep.fit.slope == pytest.approx(2.0, abs=0.05)


def test_verify_axes_and_lenz_lower():
    axes = verify_family("axes2d", 3, [8, 16, 32, 64], direction="lower")
    assert axes.passed and axes.fit.slope == pytest.approx(4.0, abs=1e-9)
    lenz = verify_family("lenz3d", 3, [16, 32, 64, 128], direction="lower")
    assert lenz.passed and lenz.target_exponent == 4


def test_verify_rejects_short_sweep():
    with pytest.raises(ValueError):
        verify_family("prop3", 2, [10, 20])
