"""High-precision evaluation: Bernoulli numbers, Euler-Maclaurin, multiple
polylogarithms, the path-splitting MZV evaluator, and the hypercube
Monte-Carlo check.  Cross-checks pit independent algorithms against each
other rather than trusting any single route."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf, pi, zeta as mp_zeta

from mzvtools import (BigReal, Composition, bernoulli, hypercube_zeta2,
                      multiple_polylog, mzv_eval, zeta_euler_maclaurin,
                      zeta_even_closed_form)
from mzvtools.numerics import hypercube_integrand


# ---------------------------------------------------------------- BigReal

def test_bigreal_from_fraction():
    x = BigReal(Fraction(1, 3), 25)
    assert x.digits == 25
    assert x.nstr(10) == "0.3333333333"


def test_bigreal_from_string_and_int():
    assert float(BigReal("2.5", 15)) == 2.5
    assert float(BigReal(7, 15)) == 7.0


def test_bigreal_json_obj():
    obj = BigReal(Fraction(1, 4), 20).to_json_obj()
    assert obj["digits"] == 20
    assert obj["value"].startswith("0.25")


def test_bigreal_requires_positive_digits():
    with pytest.raises(ValueError):
        BigReal(1, 0)


# -------------------------------------------------------------- Bernoulli

def bernoulli_oracle(n_max):
    """Taylor coefficients of t/(e^t - 1) by power-series division."""
    # denominator series: (e^t - 1)/t = sum t^k/(k+1)!
    fact = [Fraction(1)]
    for k in range(1, n_max + 2):
        fact.append(fact[-1] * k)
    den = [Fraction(1, int(fact[k + 1])) for k in range(n_max + 1)]
    inv = [Fraction(1)]
    for k in range(1, n_max + 1):
        inv.append(-sum(den[j] * inv[k - j] for j in range(1, k + 1)))
    return [inv[k] * fact[k] for k in range(n_max + 1)]


def test_bernoulli_against_series_division():
    oracle = bernoulli_oracle(20)
    for n in range(21):
        assert bernoulli(n) == oracle[n], n


def test_bernoulli_known_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 30, 2))


# -------------------------------------------------- even zeta closed form

@pytest.mark.parametrize("s,coeff", [(2, Fraction(1, 6)), (4, Fraction(1, 90)),
                                     (6, Fraction(1, 945)), (8, Fraction(1, 9450))])
def test_even_zeta_closed_form(s, coeff):
    v = zeta_even_closed_form(s, 40)
    with mp.workdps(50):
        expected = mpf(coeff.numerator) / coeff.denominator * pi ** s
        assert abs(v.value - expected) < mpf(10) ** -38


def test_even_zeta_rejects_odd_or_zero():
    with pytest.raises(ValueError):
        zeta_even_closed_form(3, 20)
    with pytest.raises(ValueError):
        zeta_even_closed_form(0, 20)


# ---------------------------------------------------------- Euler-Maclaurin

def test_euler_maclaurin_frozen_truncation():
    """Cutoff 100 with four correction terms reproduces a frozen 26-digit
    value lying within 1e-23 of the true zeta(2)."""
    v = zeta_euler_maclaurin(2, 30, cutoff=100, correction_terms=4)
    assert v.nstr(26) == "1.6449340668482264364724076"
    with mp.workdps(40):
        assert abs(v.value - pi ** 2 / 6) < mpf(10) ** -23


@pytest.mark.parametrize("s", [2, 3, 4, 7, 12])
def test_euler_maclaurin_matches_reference_zeta(s):
    v = zeta_euler_maclaurin(s, 40)
    with mp.workdps(50):
        assert abs(v.value - mp_zeta(s)) < mpf(10) ** -38


def test_euler_maclaurin_agrees_with_closed_form():
    for s in (2, 4, 6, 8, 10):
        a = zeta_euler_maclaurin(s, 50)
        b = zeta_even_closed_form(s, 50)
        with mp.workdps(60):
            assert abs(a.value - b.value) < mpf(10) ** -48


def test_euler_maclaurin_precision_scales():
    # asking for twice the digits reproduces the shorter answer
    lo = zeta_euler_maclaurin(3, 20)
    hi = zeta_euler_maclaurin(3, 40)
    with mp.workdps(50):
        assert abs(lo.value - hi.value) < mpf(10) ** -19


def test_euler_maclaurin_rejects_s_one():
    with pytest.raises(ValueError):
        zeta_euler_maclaurin(1, 20)


# -------------------------------------------------------------- polylogs

def polylog_brute(parts, z, terms):
    """Nested-sum evaluation, O(terms^depth); depth <= 2 only."""
    with mp.workdps(60):
        zm = mpf(z.numerator) / z.denominator
        if len(parts) == 1:
            return sum(zm ** k / mpf(k) ** parts[0] for k in range(1, terms))
        total = mpf(0)
        for k2 in range(2, terms):
            inner = sum(mpf(1) / mpf(k1) ** parts[0] for k1 in range(1, k2))
            total += inner * zm ** k2 / mpf(k2) ** parts[1]
        return total


def test_dilogarithm_at_one_half():
    # Li_2(1/2) = pi^2/12 - log(2)^2/2
    v = multiple_polylog(Composition((2,)), Fraction(1, 2), 40)
    with mp.workdps(50):
        expected = pi ** 2 / 12 - mp.log(2) ** 2 / 2
        assert abs(v.value - expected) < mpf(10) ** -38


@pytest.mark.parametrize("parts", [(1,), (2,), (1, 2), (2, 1), (1, 1)])
def test_polylog_matches_brute_sum_at_half(parts):
    v = multiple_polylog(Composition(parts), Fraction(1, 2), 20)
    brute = polylog_brute(parts, Fraction(1, 2), 120)
    with mp.workdps(30):
        assert abs(v.value - brute) < mpf(10) ** -18


def test_polylog_at_one_is_zeta():
    # polynomial convergence at z=1 makes this a low-precision check only
    v = multiple_polylog(Composition((2,)), 1, 4)
    with mp.workdps(25):
        assert abs(v.value - pi ** 2 / 6) < mpf(10) ** -3


def test_polylog_at_one_requires_convergent_word():
    with pytest.raises(ValueError):
        multiple_polylog(Composition((1,)), 1, 10)


def test_polylog_rejects_z_outside_unit_interval():
    with pytest.raises(ValueError):
        multiple_polylog(Composition((2,)), Fraction(3, 2), 10)
    with pytest.raises(ValueError):
        multiple_polylog(Composition((2,)), 0, 10)


def test_polylog_divergent_word_fine_below_one():
    # trailing 1s converge geometrically for z < 1
    v = multiple_polylog(Composition((1,)), Fraction(1, 2), 30)
    with mp.workdps(40):
        assert abs(v.value - mp.log(2)) < mpf(10) ** -28


def test_polylog_z_one_precision_cap():
    # polynomial convergence at z=1 makes 40 digits of zeta(2) infeasible
    with pytest.raises(ValueError):
        multiple_polylog(Composition((2,)), 1, 40)


# -------------------------------------------------------------- mzv_eval

def test_mzv_empty_word_is_one():
    assert float(mzv_eval(Composition(), 20)) == 1.0


def test_mzv_rejects_divergent():
    with pytest.raises(ValueError):
        mzv_eval(Composition((2, 1)), 20)


@pytest.mark.parametrize("s", [2, 3, 4, 5, 8])
def test_mzv_depth_one_matches_reference(s):
    v = mzv_eval(Composition((s,)), 40)
    with mp.workdps(50):
        assert abs(v.value - mp_zeta(s)) < mpf(10) ** -38


def test_mzv_euler_identity():
    # zeta(1,2) = zeta(3)
    a = mzv_eval(Composition((1, 2)), 45)
    b = mzv_eval(Composition((3,)), 45)
    with mp.workdps(55):
        assert abs(a.value - b.value) < mpf(10) ** -43


def test_mzv_weight_four_values():
    with mp.workdps(50):
        z4 = mp_zeta(4)
        assert abs(mzv_eval(Composition((1, 1, 2)), 40).value - z4) < mpf(10) ** -38
        assert abs(mzv_eval(Composition((1, 3)), 40).value - z4 / 4) < mpf(10) ** -38
        assert abs(mzv_eval(Composition((2, 2)), 40).value - 3 * z4 / 4) < mpf(10) ** -38


def test_mzv_satisfies_stuffle_numerically():
    # zeta(2)*zeta(3) = zeta(2,3) + zeta(3,2) + zeta(5)
    with mp.workdps(50):
        z = lambda *p: mzv_eval(Composition(p), 40).value
        assert abs(z(2) * z(3) - (z(2, 3) + z(3, 2) + z(5))) < mpf(10) ** -38


def test_mzv_precision_doubling_consistency():
    a = mzv_eval(Composition((2, 3)), 30)
    b = mzv_eval(Composition((2, 3)), 60)
    with mp.workdps(70):
        assert abs(a.value - b.value) < mpf(10) ** -29


def test_mzv_depth_three_value():
    # zeta(1,2,3): check against a direct truncated triple sum
    v = mzv_eval(Composition((1, 2, 3)), 25)
    with mp.workdps(35):
        brute = mpf(0)
        for k3 in range(3, 140):
            for k2 in range(2, k3):
                brute += sum(mpf(1) / k1 for k1 in range(1, k2)) / (
                    mpf(k2) ** 2 * mpf(k3) ** 3)
        # the truncated tail is ~ 1/140^2; compare loosely
        assert abs(v.value - brute) < mpf(10) ** -3


# ------------------------------------------------------------ Monte Carlo

def test_hypercube_integrand():
    assert hypercube_integrand(0.0, 0.0) == 1.0
    assert hypercube_integrand(0.5, 0.5) == pytest.approx(1 / 0.75)


def test_hypercube_estimate_hits_zeta_two():
    est = hypercube_zeta2(10 ** 5, seed=42)
    assert abs(est.value - float(pi ** 2 / 6)) < 3 * est.stderr


def test_hypercube_is_deterministic():
    a = hypercube_zeta2(10 ** 5, seed=42)
    b = hypercube_zeta2(10 ** 5, seed=42)
    assert a.value == b.value and a.stderr == b.stderr
    assert a.value == pytest.approx(1.6474309090793844, abs=0)
    assert a.samples == 10 ** 5 and a.seed == 42


def test_hypercube_stderr_scales_like_sqrt_n():
    prev = hypercube_zeta2(10 ** 4, seed=42).stderr
    for exp in (5, 6):
        cur = hypercube_zeta2(10 ** exp, seed=42).stderr
        ratio = prev / cur
        assert 10 ** 0.5 / 2 < ratio < 10 ** 0.5 * 2
        prev = cur
