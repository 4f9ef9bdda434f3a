"""Fixed-arity complex linear algebra for two-level and two-qubit systems.

Everything here works on plain numpy arrays of dtype complex128: 2x2 and 4x4
operators and length-4 state vectors. The basis ordering for 4-vectors is
(|00>, |01>, |10>, |11>) with the FIRST tensor factor the right-going
particle and the SECOND the left-going one. No other array shapes are
accepted; this is deliberate, to make shape bugs fail loudly.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "mat2",
    "mat4",
    "statevec4",
    "dagger",
    "kron2",
    "apply4",
    "unitarity_defect",
    "norm_defect",
]

_I2 = np.eye(2, dtype=complex)
_I4 = np.eye(4, dtype=complex)


def mat2(entries) -> np.ndarray:
    """Coerce to a finite 2x2 complex matrix."""
    m = np.asarray(entries, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected shape (2, 2), got {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("non-finite entries in 2x2 matrix")
    return m


def mat4(entries) -> np.ndarray:
    """Coerce to a finite 4x4 complex matrix."""
    m = np.asarray(entries, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected shape (4, 4), got {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("non-finite entries in 4x4 matrix")
    return m


def statevec4(amplitudes, *, tol: float = 1e-12) -> np.ndarray:
    """Coerce to a normalized two-qubit state vector (norm 1 within tol)."""
    v = np.asarray(amplitudes, dtype=complex)
    if v.shape != (4,):
        raise ValueError(f"expected shape (4,), got {v.shape}")
    if not np.all(np.isfinite(v.view(float))):
        raise ValueError("non-finite amplitudes")
    defect = abs(np.vdot(v, v).real - 1.0)
    if defect > tol:
        raise ValueError(f"state not normalized: |<v|v> - 1| = {defect:.3e}")
    return v


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def kron2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 operators, right factor first."""
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("kron2 takes two 2x2 matrices")
    return np.kron(a, b)


def apply4(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Apply a 4x4 operator to a 4-vector. Rejects non-finite input."""
    if m.shape != (4, 4) or v.shape != (4,):
        raise ValueError("apply4 takes a 4x4 matrix and a 4-vector")
    if not (np.all(np.isfinite(m.view(float))) and np.all(np.isfinite(v.view(float)))):
        raise ValueError("non-finite input to apply4")
    return m @ v


def unitarity_defect(m: np.ndarray) -> float:
    """Max-norm deviation of M†M from the identity; 0 for exact unitaries."""
    n = m.shape[0]
    if m.shape not in ((2, 2), (4, 4)):
        raise ValueError("unitarity_defect takes a 2x2 or 4x4 matrix")
    eye = _I2 if n == 2 else _I4
    return float(np.max(np.abs(dagger(m) @ m - eye)))


def norm_defect(v: np.ndarray) -> float:
    """|<v|v> - 1| for a state vector."""
    return float(abs(np.vdot(v, v).real - 1.0))
