"""
Bounds and fitted growth exponents
==================================

Closed-form bounds are evaluated with constant 1; comparisons use fitted
log-log slopes across a sweep of set sizes.
"""

from dotchain import BoundSpec, evaluate_bound, fit_growth_exponent, verify_family

for k in range(1, 9):
    upper = evaluate_bound(BoundSpec("thm-main", {"n": 1000, "k": k})).n_exponent
    lower = evaluate_bound(BoundSpec("prop-lower", {"n": 1000, "k": k})).n_exponent
    star = evaluate_bound(BoundSpec("cor-starlike", {"n": 1000, "k": k})).n_exponent
    print(f"k={k}: lower {lower}  upper {upper}  no-shared-radial-lines {star}")

v = evaluate_bound(BoundSpec("cor-hidim", {"n": 10**4, "k": 5, "r": 100, "t": 10, "d": 3}))
print(v.to_record())

print(fit_growth_exponent([(n, 3 * n ** 2) for n in (10, 20, 40)]))

rep = verify_family("prop3", 2, [40, 80, 160, 320], bound="hinge", direction="upper")
print("hinge:", rep.fit.slope, rep.passed)
rep = verify_family("prop3", 6, [40, 80, 160, 320], direction="lower", mode="distinct")
print("k=6 staircase, distinct:", rep.fit.slope, "target", rep.target_exponent)
rep = verify_family("lenz3d", 3, [40, 80, 160, 320], direction="lower")
print("3D lines:", rep.fit.slope, rep.passed)
