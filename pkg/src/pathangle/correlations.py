"""Joint-detection statistics and CHSH correlation functions, two ways.

Every quantity exists in two independent routes that the test suite and
the audit hold against each other:

- *simulated*: project the pipeline-evolved state onto the four detector
  pairs and square, nothing but unitaries and inner products;
- *closed form*: trigonometric expressions in the concurrence C, the
  geometric phase g, and the retarder angles.

Closed forms, with k+ = (theta_r + theta_l)/2 + g and
k- = (theta_r - theta_l)/2 - g (the one sign reading that reproduces the
pipeline exactly):

single BS
    P(i=j)  = 1/4 [1 - (1-C)/2 cos2k+ + (1+C)/2 cos2k-]
                  +- sqrt(1-C^2)/2 sin k+ cos k-
    P(i!=j) = 1/4 [1 + (1-C)/2 cos2k+ - (1+C)/2 cos2k-]
                  +- sqrt(1-C^2)/2 sin k- cos k+
    E       = -(1-C)/2 cos2k+ + (1+C)/2 cos2k-

double BS
    P(i=j)  = 1/4 [1 - C cos tl cos tr + sin tl sin tr cos2g
                  +- sqrt(1-C^2) (sin tr + sin tl cos2g)]
    P(i!=j) = 1/4 [1 + C cos tl cos tr - sin tl sin tr cos2g
                  +- sqrt(1-C^2) (sin tr - sin tl cos2g)]
    E       = -C cos tl cos tr + sin tl sin tr cos2g

The upper sign is taken when the right-arm detector index i is 0, the
lower when it is 1. Detector index convention throughout: P(i, j) has i
on the right arm, j on the left (Berry-carrying) arm.

The published closed forms for the CHSH value at the canonical settings
quad (0, pi/4, pi/2, 3pi/4) are

    S_single = sqrt2 + C sqrt2 |cos 2g|
    S_double = C sqrt2 + sqrt2 |cos 2g|

The double-BS form agrees with the simulated S everywhere. The single-BS
form agrees only where |cos 2g| = 1 (any C); elsewhere direct evaluation
gives sqrt2 (1 + C)|cos 2g|. Both are computed so the audit can display
the discrepancy instead of hiding it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .optics import BerryPlacement, InterferometerConfig, Scenario, pipeline
from .states import concurrence_of_angle

__all__ = [
    "BOUNDARY_TOL",
    "CANONICAL_SETTINGS",
    "SettingsQuad",
    "KappaPair",
    "JointDistribution",
    "Method",
    "Region",
    "BellReport",
    "classify_s",
    "joint_distribution_sim",
    "joint_distribution_closed",
    "expectation_from_distribution",
    "expectation_closed",
    "chsh_s",
    "s_canonical_sim",
    "s_paper_closed",
]

# Negative values beyond this are logic bugs, not float noise.
_PROB_ERR = 1e-9
BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class SettingsQuad:
    """CHSH retarder quadruple (theta_l, theta_r, theta_l', theta_r'), radians."""

    theta_l: float
    theta_r: float
    theta_l_prime: float
    theta_r_prime: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.theta_l, self.theta_r, self.theta_l_prime, self.theta_r_prime)


CANONICAL_SETTINGS = SettingsQuad(0.0, math.pi / 4.0, math.pi / 2.0, 3.0 * math.pi / 4.0)


@dataclass(frozen=True)
class KappaPair:
    """Half-sum/half-difference retarder combinations shifted by the phase g."""

    kappa_plus: float
    kappa_minus: float

    @classmethod
    def from_settings(cls, theta_l: float, theta_r: float, gamma: float) -> "KappaPair":
        return cls(
            kappa_plus=(theta_r + theta_l) / 2.0 + gamma,
            kappa_minus=(theta_r - theta_l) / 2.0 - gamma,
        )


@dataclass(frozen=True)
class JointDistribution:
    """The four joint-detection probabilities P(i, j), i right arm, j left."""

    p00: float
    p01: float
    p10: float
    p11: float

    @classmethod
    def from_values(cls, p00: float, p01: float, p10: float, p11: float) -> "JointDistribution":
        vals = (float(p00), float(p01), float(p10), float(p11))
        for p in vals:
            if p < -_PROB_ERR or p > 1.0 + _PROB_ERR:
                raise ArithmeticError(f"probability {p!r} outside [0, 1] beyond tolerance")
        total = sum(vals)
        if abs(total - 1.0) > _PROB_ERR:
            raise ArithmeticError(f"probabilities sum to {total!r}, not 1")
        clamped = tuple(min(max(p, 0.0), 1.0) for p in vals)
        return cls(*clamped)

    def as_array(self) -> np.ndarray:
        return np.array([self.p00, self.p01, self.p10, self.p11])


class Method(str, Enum):
    SIMULATED = "simulated"
    PAPER_CLOSED_FORM = "paper_closed_form"
    OPTIMIZED = "optimized"


class Region(str, Enum):
    LHVM_COMPATIBLE = "lhvm_compatible"
    QUANTUM_VIOLATION = "quantum_violation"
    BOUNDARY = "boundary"


def classify_s(s: float) -> Region:
    """Classical/quantum classification of an S value against the bound 2."""
    if abs(s - 2.0) <= BOUNDARY_TOL:
        return Region.BOUNDARY
    if s > 2.0:
        return Region.QUANTUM_VIOLATION
    return Region.LHVM_COMPATIBLE


@dataclass(frozen=True)
class BellReport:
    """One S evaluation: value, provenance, parameters, region call."""

    s: float
    method: Method
    scenario: Scenario
    alpha: float
    gamma: float
    settings: SettingsQuad
    region: Region

    @classmethod
    def build(cls, s, method, scenario, alpha, gamma, settings) -> "BellReport":
        return cls(s, method, scenario, alpha, gamma, settings, classify_s(s))


def joint_distribution_sim(
    scenario: Scenario,
    alpha: float,
    gamma: float,
    theta_l: float,
    theta_r: float,
    placement: BerryPlacement = BerryPlacement.SOURCE,
) -> JointDistribution:
    """Detector-pair probabilities straight from the unitary pipeline."""
    config = InterferometerConfig(
        scenario, theta_l=theta_l, theta_r=theta_r, gamma=gamma, placement=placement
    )
    _, out = pipeline(config, alpha)
    p = np.abs(out) ** 2
    return JointDistribution.from_values(p[0], p[1], p[2], p[3])


def _closed_terms_single(c, gamma, theta_l, theta_r):
    k = KappaPair.from_settings(theta_l, theta_r, gamma)
    root = math.sqrt(max(1.0 - c * c, 0.0))
    base_same = 0.25 * (
        1.0
        - 0.5 * (1.0 - c) * math.cos(2.0 * k.kappa_plus)
        + 0.5 * (1.0 + c) * math.cos(2.0 * k.kappa_minus)
    )
    base_diff = 0.25 * (
        1.0
        + 0.5 * (1.0 - c) * math.cos(2.0 * k.kappa_plus)
        - 0.5 * (1.0 + c) * math.cos(2.0 * k.kappa_minus)
    )
    cross_same = 0.5 * root * math.sin(k.kappa_plus) * math.cos(k.kappa_minus)
    cross_diff = 0.5 * root * math.sin(k.kappa_minus) * math.cos(k.kappa_plus)
    return base_same, base_diff, cross_same, cross_diff


def _closed_terms_double(c, gamma, theta_l, theta_r):
    root = math.sqrt(max(1.0 - c * c, 0.0))
    cos2g = math.cos(2.0 * gamma)
    ctl, str_, stl = math.cos(theta_l), math.sin(theta_r), math.sin(theta_l)
    ctr = math.cos(theta_r)
    base_same = 0.25 * (1.0 - c * ctl * ctr + stl * str_ * cos2g)
    base_diff = 0.25 * (1.0 + c * ctl * ctr - stl * str_ * cos2g)
    cross_same = 0.25 * root * (str_ + stl * cos2g)
    cross_diff = 0.25 * root * (str_ - stl * cos2g)
    return base_same, base_diff, cross_same, cross_diff


def _closed_probability_terms(
    scenario: Scenario, c: float, gamma: float, theta_l: float, theta_r: float
):
    terms = _closed_terms_single if scenario is Scenario.SINGLE_BS else _closed_terms_double
    return terms(c, gamma, theta_l, theta_r)


def joint_distribution_closed(
    scenario: Scenario,
    c: float,
    gamma: float,
    theta_l: float,
    theta_r: float,
) -> JointDistribution:
    """Closed-form detector-pair probabilities for a given concurrence.

    The cross-term sign is +1 for right-detector index 0 and -1 for
    index 1, in both scenarios.
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    base_same, base_diff, cross_same, cross_diff = _closed_probability_terms(
        scenario, c, gamma, theta_l, theta_r
    )
    return JointDistribution.from_values(
        base_same + cross_same,
        base_diff + cross_diff,
        base_diff - cross_diff,
        base_same - cross_same,
    )


def expectation_from_distribution(d: JointDistribution) -> float:
    """Parity expectation p00 - p01 - p10 + p11."""
    return d.p00 - d.p01 - d.p10 + d.p11


def expectation_closed(
    scenario: Scenario,
    c: float,
    gamma: float,
    theta_l: float,
    theta_r: float,
) -> float:
    """Closed-form parity expectation (the cross terms cancel pairwise)."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    if scenario is Scenario.SINGLE_BS:
        k = KappaPair.from_settings(theta_l, theta_r, gamma)
        return (
            -0.5 * (1.0 - c) * math.cos(2.0 * k.kappa_plus)
            + 0.5 * (1.0 + c) * math.cos(2.0 * k.kappa_minus)
        )
    return (
        -c * math.cos(theta_l) * math.cos(theta_r)
        + math.sin(theta_l) * math.sin(theta_r) * math.cos(2.0 * gamma)
    )


def chsh_s(e_ab: float, e_ab_prime: float, e_apb: float, e_apb_prime: float) -> float:
    """|E(a,b) - E(a,b')| + |E(a',b) + E(a',b')|."""
    return abs(e_ab - e_ab_prime) + abs(e_apb + e_apb_prime)


def _expectation_sim(scenario, alpha, gamma, theta_l, theta_r) -> float:
    return expectation_from_distribution(
        joint_distribution_sim(scenario, alpha, gamma, theta_l, theta_r)
    )


def s_canonical_sim(scenario: Scenario, alpha: float, gamma: float) -> BellReport:
    """CHSH value from the pipeline at the canonical settings quad."""
    tl, tr, tlp, trp = CANONICAL_SETTINGS.as_tuple()
    s = chsh_s(
        _expectation_sim(scenario, alpha, gamma, tl, tr),
        _expectation_sim(scenario, alpha, gamma, tl, trp),
        _expectation_sim(scenario, alpha, gamma, tlp, tr),
        _expectation_sim(scenario, alpha, gamma, tlp, trp),
    )
    return BellReport.build(s, Method.SIMULATED, scenario, alpha, gamma, CANONICAL_SETTINGS)


def s_paper_closed(scenario: Scenario, alpha: float, gamma: float) -> BellReport:
    """The published closed-form S, evaluated literally as printed."""
    c = concurrence_of_angle(alpha)
    root2 = math.sqrt(2.0)
    abs_cos = abs(math.cos(2.0 * gamma))
    if scenario is Scenario.SINGLE_BS:
        s = root2 + c * root2 * abs_cos
    else:
        s = c * root2 + root2 * abs_cos
    return BellReport.build(
        s, Method.PAPER_CLOSED_FORM, scenario, alpha, gamma, CANONICAL_SETTINGS
    )
