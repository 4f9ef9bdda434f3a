"""Bell correlations of production-angle path-entangled two-quanton states
in single and double beam-splitter Mach-Zehnder setups with geometric-phase
control, computed both from first-principles unitaries and from closed forms.
"""

from .analysis import (
    AuditReport,
    GridSpec,
    ScanRow,
    audit_closed_vs_sim,
    classify_region,
    critical_angle,
    critical_angle_closed_form,
    lhv_deterministic_max,
    lhv_strategy_table,
    optimize_settings,
    scan,
)
from .correlations import (
    CANONICAL_SETTINGS,
    BellReport,
    JointDistribution,
    KappaPair,
    Method,
    Region,
    SettingsQuad,
    chsh_s,
    classify_s,
    expectation_closed,
    expectation_from_distribution,
    joint_distribution_closed,
    joint_distribution_sim,
    s_canonical_sim,
    s_paper_closed,
)
from .linalg import apply4, kron2, unitarity_defect
from .optics import (
    BerryPlacement,
    InterferometerConfig,
    Scenario,
    arm_operator,
    beam_splitter,
    berry_operator,
    phase_shifter,
    pipeline,
)
from .states import (
    angle_of_concurrence,
    bell_basis,
    concurrence_of_angle,
    direction_kets,
    pathangled_state,
    pathangled_state_raw,
    wootters_concurrence,
)

__version__ = "0.1.0"
