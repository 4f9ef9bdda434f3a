"""Interferometer element factories and the scenario evolution pipeline.

Two setups are modeled, selected by `Scenario`:

- SINGLE_BS: each arm is one retarder followed by one beam splitter
  (open trajectory).
- DOUBLE_BS: each arm is a closed Mach-Zehnder loop, beam splitter,
  retarder, beam splitter.

The cyclic adiabatic drive acts on the left arm only and contributes the
diagonal phase operator diag(e^{i g}, e^{-i g}). By default it is applied
between the source and the first beam splitter in both scenarios; placing
it inside the double-BS loop instead changes the joint statistics (it no
longer commutes past the inner beam splitter) and is kept available as an
explicit variant for comparison, `BerryPlacement.INSIDE_LOOP`.

Retarders and the drive operator are both diagonal, so their relative
order within an arm segment is immaterial.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .linalg import apply4, kron2, mat2
from .states import pathangled_state

__all__ = [
    "Scenario",
    "BerryPlacement",
    "InterferometerConfig",
    "beam_splitter",
    "phase_shifter",
    "berry_operator",
    "arm_operator",
    "pipeline",
]


class Scenario(Enum):
    SINGLE_BS = "I"
    DOUBLE_BS = "II"


class BerryPlacement(Enum):
    SOURCE = "source"          # between source and first beam splitter
    INSIDE_LOOP = "inside-loop"  # between the two BS layers (variant, DOUBLE_BS only)


@dataclass(frozen=True)
class InterferometerConfig:
    """Scenario plus retarder angles and geometric phase, all radians."""

    scenario: Scenario
    theta_l: float = 0.0
    theta_r: float = 0.0
    gamma: float = 0.0
    placement: BerryPlacement = field(default=BerryPlacement.SOURCE)


def beam_splitter() -> np.ndarray:
    """Symmetric lossless beam splitter, (1/sqrt2) [[1, i], [i, 1]]."""
    r = 1.0 / math.sqrt(2.0)
    return mat2([[r, 1j * r], [1j * r, r]])


def phase_shifter(theta: float) -> np.ndarray:
    """Retarder diag(e^{i theta}, 1) on one arm's two paths."""
    return mat2([[cmath.exp(1j * theta), 0.0], [0.0, 1.0]])


def berry_operator(gamma: float) -> np.ndarray:
    """Geometric-phase operator diag(e^{i g}, e^{-i g}).

    The eigenstate phases of a full cyclic drive are g and -g - 2pi; the
    extra winding is e^{-2pi i} = 1, so this diagonal is exact, not an
    approximation.
    """
    return mat2([[cmath.exp(1j * gamma), 0.0], [0.0, cmath.exp(-1j * gamma)]])


def arm_operator(
    scenario: Scenario,
    theta: float,
    with_berry: bool = False,
    gamma: float = 0.0,
    placement: BerryPlacement = BerryPlacement.SOURCE,
) -> np.ndarray:
    """Single-arm 2x2 operator, rightmost factor acts first.

    SINGLE_BS: BS . P(theta) [. U_g]
    DOUBLE_BS: BS . P(theta) . BS [. U_g]     (source placement)
               BS . P(theta) [. U_g] . BS     (inside-loop variant)
    """
    bs = beam_splitter()
    p = phase_shifter(theta)
    if not with_berry:
        return bs @ p if scenario is Scenario.SINGLE_BS else bs @ p @ bs
    u = berry_operator(gamma)
    if scenario is Scenario.SINGLE_BS:
        return bs @ p @ u
    if placement is BerryPlacement.INSIDE_LOOP:
        return bs @ p @ u @ bs
    return bs @ p @ bs @ u


def pipeline(config: InterferometerConfig, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Full two-arm operator and the evolved state for a production angle.

    Returns (U, U|psi(alpha)>) with U = arm_R (x) arm_L; the geometric
    phase rides on the left arm only.
    """
    arm_r = arm_operator(config.scenario, config.theta_r)
    arm_l = arm_operator(
        config.scenario,
        config.theta_l,
        with_berry=True,
        gamma=config.gamma,
        placement=config.placement,
    )
    u = kron2(arm_r, arm_l)
    return u, apply4(u, pathangled_state(alpha))
