import random
from fractions import Fraction as F

import pytest

from thueq.dioph import root_ball
from thueq.exactnum import sqrt_lower, sqrt_upper
from thueq.measure import (
    CONTRADICTION_COEFF,
    contradiction_upper_bound,
    corollary_eps,
    corollary_lin,
    irrationality_lower,
    kappa_hi,
    kappa_lo,
    measure_constants,
    rat_pow_lower,
    rat_pow_upper,
    theorem_assembly,
)
from thueq.series import GaussRat


def test_measure_constants_type0():
    mc = measure_constants(0)
    assert (mc.k0, mc.Q_coeff, mc.l0_coeff) == (F("3.32"), F("2.94"), F("1.83"))
    assert (mc.E_div, mc.qmin_coeff, mc.c_coeff) == (F("13.27"), F("0.28"), F("5.47"))
    assert all(margin >= 0 for _, margin in mc.lines)


def test_measure_constants_type3():
    mc = measure_constants(3)
    assert (mc.k0, mc.Q_coeff, mc.l0_coeff) == (F("4.7"), F("2.94"), F("3.66"))
    assert (mc.E_div, mc.qmin_coeff, mc.c_coeff) == (F("13.27"), F("0.14"), F("15.48"))
    assert all(margin >= 0 for _, margin in mc.lines)


def test_kappa_certified_values():
    assert kappa_hi(F(100)) < F("2.83")
    assert kappa_hi(F(84)) < 3
    assert kappa_lo(F(80)) > 3
    assert kappa_hi(F(100)) > kappa_lo(F(100)) - F(1, 10**6)


def test_rat_pow_bounds():
    x = F(2)
    lo = rat_pow_lower(x, F(1, 2))
    hi = rat_pow_upper(x, F(1, 2))
    assert lo <= hi
    assert lo**2 <= 2 <= hi**2
    assert rat_pow_upper(F(8), F(1, 3)) >= 2 >= rat_pow_lower(F(8), F(1, 3))


def test_contradiction_upper_bound():
    upper = contradiction_upper_bound(F(100))
    assert upper == 3731868499357
    assert upper <= F("3.74e12")
    # upper is the least integer X with X^17 >= 137.16^100, certified by
    # the integer-power comparison (any solution then has |y| < X)
    assert (upper - 1) ** 17 < CONTRADICTION_COEFF**100 <= upper**17


def test_irrationality_lower_positive():
    for ti in (0, 3):
        lb = irrationality_lower(F(100), F(1000), ti)
        assert lb > 0
        # larger |q| weakens the bound
        assert irrationality_lower(F(100), F(10**6), ti) < lb


def test_irrationality_bound_against_certified_root():
    # sample rational points p/q and confirm the certified root enclosure
    # never comes closer than the claimed lower bound
    t = GaussRat(F(0), F(100))
    alpha = root_ball(t, 0.01j, F(1, 2**120))
    rng = random.Random(7)
    for _ in range(50):
        qa, qb = rng.randint(28, 200), rng.randint(28, 200)
        pa, pb = rng.randint(-3, 3), rng.randint(-3, 3)
        q_sq = qa * qa + qb * qb
        # distance from alpha to p/q, from below
        pr = F(pa * qa + pb * qb, q_sq)
        pi = F(pb * qa - pa * qb, q_sq)
        dr = alpha.re_mid - pr
        di = alpha.im_mid - pi
        dist_lo = max(F(0), sqrt_lower(dr * dr + di * di) - alpha.radius)
        lb = irrationality_lower(F(100), sqrt_upper(F(q_sq)), 0)
        assert dist_lo > lb


def test_theorem_assembly_proven(assembly_100):
    rep = assembly_100
    assert rep.verdict == "proven"
    assert all(g.ok for g in rep.all_gates)
    assert rep.contradiction_upper == 3731868499357
    assert rep.descent_lower_0 > F("2.115e13")
    assert rep.descent_lower_3 > F("1.047e13")
    assert rep.contradiction_upper < min(rep.descent_lower_0, rep.descent_lower_3)


def test_theorem_assembly_inconclusive_below_domain(assembly_80):
    rep = assembly_80
    assert rep.verdict == "inconclusive"
    failed = {g.name for g in rep.all_gates if not g.ok}
    assert "kappa below 3" in failed


def test_theorem_assembly_gate_failure_is_reported_not_raised():
    # an unusable descent depth must surface as a failed gate
    rep = theorem_assembly(F(100), kmax=5)
    assert rep.verdict == "inconclusive"
    assert rep.contradiction_upper is not None
    assert rep.descent_lower_0 is not None
    assert rep.contradiction_upper > min(rep.descent_lower_0, rep.descent_lower_3)


def test_corollary_lin():
    for C in (F(1, 2), F(1), F(10)):
        out = corollary_lin(C)
        assert out["t0"] == 524
        assert kappa_hi(out["t0"]) < 2
        assert out["C0"] >= max(out["terms"])
        assert out["consistency_margin"] > 0
    # a tiny C collapses the iteration term to 1
    small = corollary_lin(F(1, 1000))
    assert small["terms"][2] == 1


def test_corollary_lin_rejects_bad_t0():
    with pytest.raises(ValueError):
        corollary_lin(F(1), t0=F(200))
    with pytest.raises(ValueError):
        corollary_lin(F(0))


def test_corollary_eps():
    expected_magnitude = {
        F(1, 4): (F("3.5e34"), F("3.6e34")),
        F(1, 2): (F("1.5e19"), F("1.6e19")),
        F(3, 4): (F("3.4e14"), F("3.5e14")),
    }
    for eps, (lo, hi) in expected_magnitude.items():
        out = corollary_eps(eps)
        assert lo <= out["t0"] <= hi
        assert all(g.ok for g in out["gates"])
        assert all(g.ok for g in out["gates_at_double"])


def test_corollary_eps_domain():
    with pytest.raises(ValueError):
        corollary_eps(F(0))
    with pytest.raises(ValueError):
        corollary_eps(F(1))
