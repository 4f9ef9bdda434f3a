"""Critical-angle location, region mapping, LHV bounds, settings search, audits.

The classical/quantum boundary at zero geometric phase sits where the
canonical-settings S value crosses 2. Since S = sqrt2 (1 + C(alpha)) there,
the crossing has the closed form alpha_c = (1/4) arccos(2 sqrt2 - 3),
about 24.97 deg. The primary path finds it by bisection on the simulated
S so the whole pipeline is exercised; the closed form is the cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .correlations import (
    CANONICAL_SETTINGS,
    BellReport,
    Method,
    SettingsQuad,
    chsh_s,
    classify_s,
    expectation_closed,
    expectation_from_distribution,
    joint_distribution_sim,
    s_canonical_sim,
    s_paper_closed,
)
from .linalg import kron2
from .optics import Scenario, arm_operator
from .states import check_production_angle, concurrence_of_angle, pathangled_state

__all__ = [
    "critical_angle",
    "critical_angle_closed_form",
    "classify_region",
    "lhv_deterministic_max",
    "lhv_strategy_table",
    "optimize_settings",
    "GridSpec",
    "DeviationRecord",
    "AuditReport",
    "audit_closed_vs_sim",
    "ScanRow",
    "scan",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_TWO_PI = 2.0 * math.pi

# Gate for the probability/expectation legs of the audit. The S leg is
# reported but never gated (the single-BS closed form genuinely deviates).
AUDIT_GATE = 1e-10


def critical_angle_closed_form() -> float:
    """alpha_c = (1/4) arccos(2 sqrt2 - 3), radians."""
    return 0.25 * math.acos(2.0 * math.sqrt(2.0) - 3.0)


def critical_angle(tolerance: float = 1e-12, scenario: Scenario = Scenario.DOUBLE_BS) -> float:
    """Bisection root of S(alpha, gamma=0) - 2 on (0, pi/4], radians.

    S is monotone in alpha on this interval and crosses 2 exactly once;
    the bracket is halved until its width drops below `tolerance`. Both
    scenarios share the root at gamma = 0.
    """
    if not 0.0 < tolerance < 1e-3:
        raise ValueError(f"tolerance {tolerance!r} outside (0, 1e-3)")
    lo, hi = 1e-9, math.pi / 4.0

    def f(a: float) -> float:
        return s_canonical_sim(scenario, a, 0.0).s - 2.0

    f_lo = f(lo)
    if f_lo > 0.0:
        raise ArithmeticError("no sign change at the lower bracket edge")
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def classify_region(alpha: float, gamma: float, scenario: Scenario) -> BellReport:
    """Simulated canonical-settings S plus its LHVM/quantum/boundary call."""
    return s_canonical_sim(scenario, alpha, gamma)


def lhv_strategy_table() -> list[dict]:
    """All 16 deterministic local strategies and their S values, exact ints."""
    rows = []
    for a, ap, b, bp in itertools.product((-1, 1), repeat=4):
        s = abs(a * b - a * bp) + abs(ap * b + ap * bp)
        rows.append({"a": a, "a_prime": ap, "b": b, "b_prime": bp, "s": s})
    return rows


def lhv_deterministic_max() -> int:
    """Maximum S over deterministic local strategies; provably 2."""
    return max(row["s"] for row in lhv_strategy_table())


def _expectation_grid(scenario: Scenario, c: float, gamma: float, axis: np.ndarray) -> np.ndarray:
    """E on an axis x axis grid, rows = left setting, columns = right."""
    left = axis[:, None]
    right = axis[None, :]
    if scenario is Scenario.SINGLE_BS:
        return (
            -0.5 * (1.0 - c) * np.cos(right + left + 2.0 * gamma)
            + 0.5 * (1.0 + c) * np.cos(right - left - 2.0 * gamma)
        )
    return (
        -c * np.cos(left) * np.cos(right)
        + np.sin(left) * np.sin(right) * math.cos(2.0 * gamma)
    )


def _golden_max(f, lo: float, hi: float, iters: int = 48) -> float:
    """Deterministic golden-section maximizer on [lo, hi]."""
    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a = x1
            x1, f1 = x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
        else:
            b = x2
            x2, f2 = x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
    return 0.5 * (a + b)


def optimize_settings(
    scenario: Scenario,
    alpha: float,
    gamma: float,
    coarse_steps: int = 24,
    refine_rounds: int = 3,
) -> BellReport:
    """Best CHSH settings quad by coarse grid plus golden-section descent.

    The coarse stage scans the full settings 4-torus (coarse_steps per
    axis, factorized: the two left settings decouple once the right pair
    is fixed). The incumbent, or the canonical quad if it scores higher,
    is then polished by refine_rounds sweeps of coordinate-wise
    golden-section search. Fully deterministic for fixed arguments.
    """
    if coarse_steps < 8:
        raise ValueError("coarse_steps must be >= 8")
    if refine_rounds < 1:
        raise ValueError("refine_rounds must be >= 1")
    c = concurrence_of_angle(alpha)

    def s_of(quad) -> float:
        tl, tr, tlp, trp = quad
        return chsh_s(
            expectation_closed(scenario, c, gamma, tl, tr),
            expectation_closed(scenario, c, gamma, tl, trp),
            expectation_closed(scenario, c, gamma, tlp, tr),
            expectation_closed(scenario, c, gamma, tlp, trp),
        )

    axis = np.linspace(0.0, _TWO_PI, coarse_steps, endpoint=False)
    e = _expectation_grid(scenario, c, gamma, axis)
    # S(tl, tr, tl', tr') = max_tl |E(tl,tr)-E(tl,tr')|  +  max_tl' |E(tl',tr)+E(tl',tr')|
    diff = np.abs(e[:, :, None] - e[:, None, :])
    summ = np.abs(e[:, :, None] + e[:, None, :])
    l_best = diff.argmax(axis=0)
    lp_best = summ.argmax(axis=0)
    total = diff.max(axis=0) + summ.max(axis=0)
    r_i, rp_i = np.unravel_index(int(total.argmax()), total.shape)
    incumbent = (
        float(axis[l_best[r_i, rp_i]]),
        float(axis[r_i]),
        float(axis[lp_best[r_i, rp_i]]),
        float(axis[rp_i]),
    )
    if s_of(CANONICAL_SETTINGS.as_tuple()) > s_of(incumbent):
        incumbent = CANONICAL_SETTINGS.as_tuple()

    half_width = _TWO_PI / coarse_steps
    quad = list(incumbent)
    for _ in range(refine_rounds):
        for k in range(4):
            def along(x, _k=k):
                probe = quad.copy()
                probe[_k] = x
                return s_of(probe)

            quad[k] = _golden_max(along, quad[k] - half_width, quad[k] + half_width)
        half_width *= 0.5

    best = tuple(quad)
    if s_of(CANONICAL_SETTINGS.as_tuple()) > s_of(best):
        best = CANONICAL_SETTINGS.as_tuple()
    return BellReport.build(
        s_of(best), Method.OPTIMIZED, scenario, alpha, gamma, SettingsQuad(*best)
    )


@dataclass(frozen=True)
class GridSpec:
    """Axes for the closed-vs-simulated audit."""

    alpha_axis: tuple[float, ...]
    gamma_axis: tuple[float, ...]
    theta_l_axis: tuple[float, ...]
    theta_r_axis: tuple[float, ...]

    def __post_init__(self):
        for name in ("alpha_axis", "gamma_axis", "theta_l_axis", "theta_r_axis"):
            if len(getattr(self, name)) == 0:
                raise ValueError(f"{name} is empty")

    @classmethod
    def regular(cls, steps: int = 20) -> "GridSpec":
        """steps points per axis: alpha in [0, pi/2], gamma in [0, pi],
        retarders in [0, 2pi)."""
        if steps < 2:
            raise ValueError("steps must be >= 2")
        return cls(
            alpha_axis=tuple(np.linspace(0.0, math.pi / 2.0, steps)),
            gamma_axis=tuple(np.linspace(0.0, math.pi, steps)),
            theta_l_axis=tuple(np.linspace(0.0, _TWO_PI, steps, endpoint=False)),
            theta_r_axis=tuple(np.linspace(0.0, _TWO_PI, steps, endpoint=False)),
        )

    def describe(self) -> dict:
        return {
            "alpha_points": len(self.alpha_axis),
            "gamma_points": len(self.gamma_axis),
            "theta_l_points": len(self.theta_l_axis),
            "theta_r_points": len(self.theta_r_axis),
        }


@dataclass(frozen=True)
class DeviationRecord:
    max_abs_deviation: float
    worst_point: dict = field(default_factory=dict)


@dataclass(frozen=True)
class AuditReport:
    """Worst closed-vs-simulated deviations over a grid.

    The probability and expectation legs gate `passed`; the S leg is
    informational because the single-BS closed form differs from direct
    evaluation away from |cos 2g| = 1.
    """

    scenario: Scenario
    grid: dict
    probabilities: DeviationRecord
    expectations: DeviationRecord
    s_values: DeviationRecord
    passed: bool


def audit_closed_vs_sim(scenario: Scenario, grid: GridSpec) -> AuditReport:
    """Compare closed-form probabilities, E, and S against the pipeline.

    The inner loop inlines what joint_distribution_sim and
    joint_distribution_closed compute, on plain floats, to keep the
    full-grid audit fast; equivalence of the inlined legs with the public
    operations is pinned by unit tests.
    """
    from .correlations import _closed_probability_terms

    states = [pathangled_state(a) for a in grid.alpha_axis]
    cs = [concurrence_of_angle(a) for a in grid.alpha_axis]
    arms_r = [arm_operator(scenario, tr) for tr in grid.theta_r_axis]

    p_dev, p_worst = -1.0, {}
    e_dev, e_worst = -1.0, {}
    for gamma in grid.gamma_axis:
        for tl in grid.theta_l_axis:
            arm_l = arm_operator(scenario, tl, with_berry=True, gamma=gamma)
            for tr, arm_r in zip(grid.theta_r_axis, arms_r):
                # the two-arm operator is alpha-independent; build it once
                u = kron2(arm_r, arm_l)
                for alpha, psi, c in zip(grid.alpha_axis, states, cs):
                    out = u @ psi
                    p0, p1, p2, p3 = (out.real ** 2 + out.imag ** 2).tolist()
                    base_s, base_d, cross_s, cross_d = _closed_probability_terms(
                        scenario, c, gamma, tl, tr
                    )
                    dev = max(
                        abs(p0 - (base_s + cross_s)),
                        abs(p1 - (base_d + cross_d)),
                        abs(p2 - (base_d - cross_d)),
                        abs(p3 - (base_s - cross_s)),
                    )
                    if dev > p_dev:
                        p_dev = dev
                        p_worst = {"alpha": alpha, "gamma": gamma, "theta_l": tl, "theta_r": tr}
                    e_sim = p0 - p1 - p2 + p3
                    e_cl = expectation_closed(scenario, c, gamma, tl, tr)
                    dev = abs(e_sim - e_cl)
                    if dev > e_dev:
                        e_dev = dev
                        e_worst = {"alpha": alpha, "gamma": gamma, "theta_l": tl, "theta_r": tr}

    s_dev, s_worst = -1.0, {}
    for gamma in grid.gamma_axis:
        for alpha in grid.alpha_axis:
            s_sim = s_canonical_sim(scenario, alpha, gamma).s
            s_cl = s_paper_closed(scenario, alpha, gamma).s
            dev = abs(s_sim - s_cl)
            if dev > s_dev:
                s_dev = dev
                s_worst = {"alpha": alpha, "gamma": gamma}

    return AuditReport(
        scenario=scenario,
        grid=grid.describe(),
        probabilities=DeviationRecord(p_dev, p_worst),
        expectations=DeviationRecord(e_dev, e_worst),
        s_values=DeviationRecord(s_dev, s_worst),
        passed=(p_dev <= AUDIT_GATE and e_dev <= AUDIT_GATE),
    )


@dataclass(frozen=True)
class ScanRow:
    alpha: float
    gamma: float
    concurrence: float
    s_sim: float
    s_paper: float
    region: str


def _s_sim_at(scenario: Scenario, alpha: float, gamma: float, settings: SettingsQuad) -> float:
    tl, tr, tlp, trp = settings.as_tuple()

    def e(left, right):
        return expectation_from_distribution(
            joint_distribution_sim(scenario, alpha, gamma, left, right)
        )

    return chsh_s(e(tl, tr), e(tl, trp), e(tlp, tr), e(tlp, trp))


def scan(
    scenario: Scenario,
    alpha_axis,
    gamma_axis,
    settings: SettingsQuad = CANONICAL_SETTINGS,
) -> list[ScanRow]:
    """Row-major (alpha outer, gamma inner) sweep of S and concurrence."""
    for a in alpha_axis:
        check_production_angle(a)
    rows = []
    for alpha in alpha_axis:
        c = concurrence_of_angle(alpha)
        for gamma in gamma_axis:
            s_sim = _s_sim_at(scenario, alpha, gamma, settings)
            s_pc = s_paper_closed(scenario, alpha, gamma).s
            rows.append(
                ScanRow(
                    alpha=alpha,
                    gamma=gamma,
                    concurrence=c,
                    s_sim=s_sim,
                    s_paper=s_pc,
                    region=classify_s(s_sim).value,
                )
            )
    return rows
