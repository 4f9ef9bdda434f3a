"""Two-quanton states controlled by the pair production angle alpha.

A source emitting one particle up-left and its partner down-right (or the
mirror arrangement) at angle alpha produces the path-entangled superposition

    |psi> = N (|u>_R |d>_L + |d>_R |u>_L),

whose entanglement is fixed purely by geometry:

    C(alpha) = (1 - cos^2 2a) / (1 + cos^2 2a)

- alpha = 0:    C = 0, product state, all amplitudes equal
- alpha = pi/4: C = 1, maximally entangled
- symmetric about pi/4 on [0, pi/2]

In the Bell basis the same state reads

    |psi> = sqrt((1-C)/2) |chi+> + sqrt((1+C)/2) |phi+>

with chi+- = (|00> +- |11>)/sqrt2 and phi+- = (|01> +- |10>)/sqrt2. Both
constructions are exposed: they agree on [0, pi/4]; past pi/4 the raw form
picks up a sign on the |00> and |11> amplitudes (same concurrence, same
physics, documented branch).
"""

from __future__ import annotations

import math

import numpy as np

from .linalg import statevec4

__all__ = [
    "ALPHA_MAX",
    "check_production_angle",
    "concurrence_of_angle",
    "angle_of_concurrence",
    "direction_kets",
    "pathangled_state",
    "pathangled_state_raw",
    "wootters_concurrence",
    "bell_basis",
]

ALPHA_MAX = math.pi / 2


def check_production_angle(alpha: float) -> float:
    """Validate alpha in [0, pi/2] radians; returns it unchanged."""
    if not math.isfinite(alpha):
        raise ValueError("production angle must be finite")
    if alpha < 0.0 or alpha > ALPHA_MAX:
        raise ValueError(
            f"production angle {alpha!r} rad outside [0, pi/2]"
        )
    return alpha


def concurrence_of_angle(alpha: float) -> float:
    """Concurrence C(alpha) = (1 - cos^2 2a)/(1 + cos^2 2a), in [0, 1]."""
    check_production_angle(alpha)
    c2 = math.cos(2.0 * alpha) ** 2
    return (1.0 - c2) / (1.0 + c2)


def angle_of_concurrence(c: float) -> float:
    """Inverse of concurrence_of_angle on the rising branch [0, pi/4]."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    return 0.5 * math.acos(math.sqrt((1.0 - c) / (1.0 + c)))


def direction_kets(alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Unit kets |u_a>, |d_a> of the two emission directions.

    |u_a> = (cos(pi/4 - a), sin(pi/4 - a)), |d_a> is the component swap.
    Overlap <u|d> = cos 2a: orthogonal at alpha = pi/4, parallel at 0.
    """
    check_production_angle(alpha)
    c = math.cos(math.pi / 4.0 - alpha)
    s = math.sin(math.pi / 4.0 - alpha)
    u = np.array([c, s], dtype=complex)
    d = np.array([s, c], dtype=complex)
    return u, d


def pathangled_state(alpha: float) -> np.ndarray:
    """Bell-basis construction: sqrt((1-C)/2)|chi+> + sqrt((1+C)/2)|phi+>.

    All four amplitudes are real and non-negative for any alpha in domain.
    Evaluated componentwise as (|cos2a|, 1, 1, |cos2a|)/sqrt(2 + 2cos^2 2a),
    which is the same expression without the cancellation that
    sqrt(1 - C) suffers near alpha = pi/4.
    """
    check_production_angle(alpha)
    c = abs(math.cos(2.0 * alpha))
    n = 1.0 / math.sqrt(2.0 + 2.0 * c * c)
    return statevec4([n * c, n, n, n * c])


def pathangled_state_raw(alpha: float) -> np.ndarray:
    """Direction-ket construction: N (u (x) d + d (x) u).

    Componentwise N*(cos2a, 1, 1, cos2a) with N = 1/sqrt(2 + 2cos^2 2a),
    the unique prefactor giving unit norm. Matches pathangled_state on
    [0, pi/4]; beyond pi/4 the outer amplitudes go negative.
    """
    check_production_angle(alpha)
    u, d = direction_kets(alpha)
    raw = np.kron(u, d) + np.kron(d, u)
    n = 1.0 / math.sqrt(2.0 + 2.0 * math.cos(2.0 * alpha) ** 2)
    return statevec4(n * raw)


def wootters_concurrence(psi: np.ndarray) -> float:
    """Pure-state concurrence 2|a*d - b*c| of amplitudes (a, b, c, d).

    Independent of how psi was built; used as the oracle against
    concurrence_of_angle.
    """
    v = statevec4(psi)
    c = 2.0 * abs(v[0] * v[3] - v[1] * v[2])
    return float(min(c, 1.0))


def bell_basis() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The four Bell states (chi+, chi-, phi+, phi-), orthonormal."""
    r = 1.0 / math.sqrt(2.0)
    chi_plus = statevec4([r, 0.0, 0.0, r])
    chi_minus = statevec4([r, 0.0, 0.0, -r])
    phi_plus = statevec4([0.0, r, r, 0.0])
    phi_minus = statevec4([0.0, r, -r, 0.0])
    return chi_plus, chi_minus, phi_plus, phi_minus
