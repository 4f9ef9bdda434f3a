import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pathangle.correlations import (
    CANONICAL_SETTINGS,
    BellReport,
    JointDistribution,
    KappaPair,
    Method,
    Region,
    chsh_s,
    classify_s,
    expectation_closed,
    expectation_from_distribution,
    joint_distribution_closed,
    joint_distribution_sim,
    s_canonical_sim,
    s_paper_closed,
)
from pathangle.optics import Scenario
from pathangle.states import concurrence_of_angle

SQRT2 = math.sqrt(2.0)

angles = st.floats(-2.0 * math.pi, 2.0 * math.pi, allow_nan=False)
alphas = st.floats(0.0, math.pi / 2.0, allow_nan=False)
scenarios = st.sampled_from([Scenario.SINGLE_BS, Scenario.DOUBLE_BS])


# ------------------------------------------------------------ distributions

def test_sim_single_maximal_state():
    d = joint_distribution_sim(Scenario.SINGLE_BS, math.pi / 4.0, 0.0, 0.0, 0.0)
    np.testing.assert_allclose(d.as_array(), [0.5, 0.0, 0.0, 0.5], atol=1e-12)


def test_sim_single_third_concurrence():
    d = joint_distribution_sim(Scenario.SINGLE_BS, math.pi / 8.0, 0.0, 0.0, 0.0)
    np.testing.assert_allclose(
        d.as_array(), [1 / 3, 1 / 6, 1 / 6, 1 / 3], atol=1e-12
    )


def test_sim_double_maximal_state():
    d = joint_distribution_sim(Scenario.DOUBLE_BS, math.pi / 4.0, 0.0, 0.0, 0.0)
    np.testing.assert_allclose(d.as_array(), [0.0, 0.5, 0.5, 0.0], atol=1e-12)


def test_closed_single_maximal_zero_settings():
    d = joint_distribution_closed(Scenario.SINGLE_BS, 1.0, 0.0, 0.0, 0.0)
    np.testing.assert_allclose(d.as_array(), [0.5, 0.0, 0.0, 0.5], atol=1e-15)


def test_closed_double_maximal_any_gamma():
    for gamma in np.linspace(-math.pi, math.pi, 21):
        d = joint_distribution_closed(Scenario.DOUBLE_BS, 1.0, gamma, 0.0, 0.0)
        np.testing.assert_allclose(d.as_array(), [0.0, 0.5, 0.5, 0.0], atol=1e-15)


def test_closed_single_zero_settings_formula():
    # p_ij = 1/4 [1 + (-1)^(i+j) C cos2g + (-1)^j sqrt(1-C^2) sin2g];
    # the interference term follows the left detector index j, the arm
    # that carries the adiabatic drive
    for c in np.linspace(0.0, 1.0, 11):
        for gamma in np.linspace(-math.pi, math.pi, 23):
            d = joint_distribution_closed(Scenario.SINGLE_BS, c, gamma, 0.0, 0.0)
            root = math.sqrt(1.0 - c * c)
            for (i, j), p in zip(
                [(0, 0), (0, 1), (1, 0), (1, 1)], d.as_array()
            ):
                expected = 0.25 * (
                    1.0
                    + (-1) ** (i + j) * c * math.cos(2.0 * gamma)
                    + (-1) ** j * root * math.sin(2.0 * gamma)
                )
                assert p == pytest.approx(expected, abs=1e-12)


def test_closed_rejects_bad_concurrence():
    with pytest.raises(ValueError):
        joint_distribution_closed(Scenario.SINGLE_BS, 1.5, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        expectation_closed(Scenario.DOUBLE_BS, -0.1, 0.0, 0.0, 0.0)


@settings(max_examples=150, deadline=None)
@given(scenarios, alphas, angles, angles, angles)
def test_closed_matches_sim(scenario, alpha, gamma, tl, tr):
    d_sim = joint_distribution_sim(scenario, alpha, gamma, tl, tr)
    c = concurrence_of_angle(alpha)
    d_closed = joint_distribution_closed(scenario, c, gamma, tl, tr)
    assert np.max(np.abs(d_sim.as_array() - d_closed.as_array())) <= 1e-10


@settings(max_examples=100, deadline=None)
@given(scenarios, alphas, angles, angles, angles)
def test_distribution_simplex(scenario, alpha, gamma, tl, tr):
    d = joint_distribution_sim(scenario, alpha, gamma, tl, tr)
    arr = d.as_array()
    assert abs(arr.sum() - 1.0) <= 1e-10
    assert np.all(arr >= 0.0)
    assert np.all(arr <= 1.0)


def test_double_distribution_even_in_gamma():
    rng = np.random.default_rng(2)
    for _ in range(100):
        gamma, tl, tr = rng.uniform(-math.pi, math.pi, 3)
        alpha = rng.uniform(0.0, math.pi / 2.0)
        a = joint_distribution_sim(Scenario.DOUBLE_BS, alpha, gamma, tl, tr)
        b = joint_distribution_sim(Scenario.DOUBLE_BS, alpha, -gamma, tl, tr)
        assert np.max(np.abs(a.as_array() - b.as_array())) <= 1e-12


def test_distributions_pi_periodic_in_gamma():
    rng = np.random.default_rng(3)
    for scenario in (Scenario.SINGLE_BS, Scenario.DOUBLE_BS):
        for _ in range(60):
            gamma, tl, tr = rng.uniform(-math.pi, math.pi, 3)
            alpha = rng.uniform(0.0, math.pi / 2.0)
            a = joint_distribution_sim(scenario, alpha, gamma, tl, tr)
            b = joint_distribution_sim(scenario, alpha, gamma + math.pi, tl, tr)
            assert np.max(np.abs(a.as_array() - b.as_array())) <= 1e-12


def test_from_values_clamps_float_noise_only():
    d = JointDistribution.from_values(-1e-12, 0.5, 0.25, 0.25 + 1e-12)
    assert d.p00 == 0.0
    assert d.p11 <= 1.0
    with pytest.raises(ArithmeticError):
        JointDistribution.from_values(-1e-8, 0.5, 0.25, 0.25 + 1e-8)
    with pytest.raises(ArithmeticError):
        JointDistribution.from_values(0.3, 0.3, 0.3, 0.3)


# ------------------------------------------------------------ expectations

def test_expectation_from_distribution_values():
    d = JointDistribution.from_values(0.5, 0.0, 0.0, 0.5)
    assert expectation_from_distribution(d) == pytest.approx(1.0, abs=1e-15)
    d = JointDistribution.from_values(0.25, 0.25, 0.25, 0.25)
    assert expectation_from_distribution(d) == pytest.approx(0.0, abs=1e-15)


def test_expectation_zero_settings_is_c_cos_two_gamma():
    for alpha in np.linspace(0.0, math.pi / 2.0, 13):
        c = concurrence_of_angle(alpha)
        for gamma in np.linspace(-math.pi, math.pi, 17):
            d = joint_distribution_sim(Scenario.SINGLE_BS, alpha, gamma, 0.0, 0.0)
            e = expectation_from_distribution(d)
            assert e == pytest.approx(c * math.cos(2.0 * gamma), abs=1e-12)


def test_expectation_closed_special_cases():
    assert expectation_closed(Scenario.DOUBLE_BS, 0.7, 0.3, 0.0, 0.0) == pytest.approx(
        -0.7, abs=1e-15
    )
    assert expectation_closed(Scenario.SINGLE_BS, 0.7, 0.4, 0.0, 0.0) == pytest.approx(
        0.7 * math.cos(0.8), abs=1e-15
    )
    for tl in np.linspace(0.0, 2.0 * math.pi, 9):
        for tr in np.linspace(0.0, 2.0 * math.pi, 9):
            got = expectation_closed(Scenario.DOUBLE_BS, 1.0, 0.0, tl, tr)
            assert got == pytest.approx(-math.cos(tl + tr), abs=1e-12)


@settings(max_examples=150, deadline=None)
@given(scenarios, st.floats(0.0, 1.0), angles, angles, angles)
def test_expectation_consistency(scenario, c, gamma, tl, tr):
    d = joint_distribution_closed(scenario, c, gamma, tl, tr)
    lhs = expectation_from_distribution(d)
    rhs = expectation_closed(scenario, c, gamma, tl, tr)
    assert abs(lhs - rhs) <= 1e-12
    assert abs(rhs) <= 1.0 + 1e-12


def test_kappa_pair_convention():
    k = KappaPair.from_settings(0.3, 0.5, 0.2)
    assert k.kappa_plus == pytest.approx((0.5 + 0.3) / 2.0 + 0.2, abs=1e-15)
    assert k.kappa_minus == pytest.approx((0.5 - 0.3) / 2.0 - 0.2, abs=1e-15)


# ------------------------------------------------------------ CHSH S

def test_chsh_arithmetic():
    r = 1.0 / SQRT2
    assert chsh_s(r, -r, r, r) == pytest.approx(2.0 * SQRT2, abs=1e-15)
    assert chsh_s(0.0, 0.0, 0.0, 0.0) == 0.0


def test_tsirelson_saturation_double():
    rep = s_canonical_sim(Scenario.DOUBLE_BS, math.pi / 4.0, 0.0)
    assert rep.s == pytest.approx(2.0 * SQRT2, abs=1e-12)
    assert rep.method is Method.SIMULATED
    assert rep.region is Region.QUANTUM_VIOLATION
    assert rep.settings == CANONICAL_SETTINGS


def test_zero_gamma_convergence_both_scenarios():
    for alpha in np.linspace(0.0, math.pi / 2.0, 50):
        expected = SQRT2 * (1.0 + concurrence_of_angle(alpha))
        s1 = s_canonical_sim(Scenario.SINGLE_BS, alpha, 0.0).s
        s2 = s_canonical_sim(Scenario.DOUBLE_BS, alpha, 0.0).s
        assert abs(s1 - expected) <= 1e-10
        assert abs(s2 - expected) <= 1e-10


def test_double_product_state_keeps_phase_dependence():
    for gamma in np.linspace(0.0, math.pi, 41):
        s = s_canonical_sim(Scenario.DOUBLE_BS, 0.0, gamma).s
        assert s == pytest.approx(SQRT2 * abs(math.cos(2.0 * gamma)), abs=1e-10)


def test_single_maximal_state_phase_scaling():
    for gamma in np.linspace(0.0, math.pi, 41):
        s = s_canonical_sim(Scenario.SINGLE_BS, math.pi / 4.0, gamma).s
        assert s == pytest.approx(2.0 * SQRT2 * abs(math.cos(2.0 * gamma)), abs=1e-10)


def test_s_canonical_parity_and_periodicity():
    rng = np.random.default_rng(4)
    for scenario in (Scenario.SINGLE_BS, Scenario.DOUBLE_BS):
        for _ in range(25):
            alpha = rng.uniform(0.0, math.pi / 2.0)
            gamma = rng.uniform(-math.pi, math.pi)
            s = s_canonical_sim(scenario, alpha, gamma).s
            assert s == pytest.approx(s_canonical_sim(scenario, alpha, -gamma).s, abs=1e-12)
            assert s == pytest.approx(
                s_canonical_sim(scenario, alpha, gamma + math.pi).s, abs=1e-12
            )


@settings(max_examples=80, deadline=None)
@given(scenarios, alphas, angles)
def test_s_canonical_within_tsirelson(scenario, alpha, gamma):
    s = s_canonical_sim(scenario, alpha, gamma).s
    assert 0.0 <= s <= 2.0 * SQRT2 + 1e-10


def test_s_paper_closed_values():
    for alpha in np.linspace(0.0, math.pi / 2.0, 11):
        c = concurrence_of_angle(alpha)
        for n in range(4):
            gamma = (2 * n + 1) * math.pi / 4.0
            rep = s_paper_closed(Scenario.DOUBLE_BS, alpha, gamma)
            assert rep.s == pytest.approx(c * SQRT2, abs=1e-12)
            assert rep.method is Method.PAPER_CLOSED_FORM
    assert s_paper_closed(Scenario.SINGLE_BS, math.pi / 4.0, 0.0).s == pytest.approx(
        2.0 * SQRT2, abs=1e-15
    )


def test_single_closed_form_discrepancy_at_quarter_gamma():
    # the printed single-BS closed form floors at sqrt2 while the direct
    # canonical-settings evaluation vanishes with cos 2g
    rep_closed = s_paper_closed(Scenario.SINGLE_BS, 0.0, math.pi / 4.0)
    rep_sim = s_canonical_sim(Scenario.SINGLE_BS, 0.0, math.pi / 4.0)
    assert rep_closed.s == pytest.approx(SQRT2, abs=1e-15)
    assert rep_sim.s == pytest.approx(0.0, abs=1e-12)


def test_classify_s_thresholds():
    assert classify_s(2.0) is Region.BOUNDARY
    assert classify_s(2.0 + 5e-10) is Region.BOUNDARY
    assert classify_s(2.0 + 5e-9) is Region.QUANTUM_VIOLATION
    assert classify_s(1.99) is Region.LHVM_COMPATIBLE


def test_bell_report_build_assigns_region():
    rep = BellReport.build(
        2.5, Method.SIMULATED, Scenario.DOUBLE_BS, 0.5, 0.0, CANONICAL_SETTINGS
    )
    assert rep.region is Region.QUANTUM_VIOLATION
