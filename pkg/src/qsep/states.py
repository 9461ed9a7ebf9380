"""The Bell basis and the three-parameter family of Bell-diagonal states.

Conventions, fixed once for the whole package:

* computational basis order is (up-up, up-down, down-up, down-down);
* Bell kets carry real amplitudes +-1/sqrt(2);
* projector order is (phi+, phi-, psi+, psi-), and a state (x, y, z) puts
  weights ((1-x)/4, (1-y)/4, (1-z)/4, (1+x+y+z)/4) on them, in that order.

Physical states fill the tetrahedron x, y, z <= 1 with x + y + z >= -1,
whose vertices map to the four Bell projectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import UnphysicalStateError
from .linalg import Spectrum, hermitian_eigenvalues

WEIGHT_TOL = 1e-12
WEIGHT_LABELS = ("phi+", "phi-", "psi+", "psi-")

_SQRT_HALF = math.sqrt(0.5)
_BELL_KETS = (
    (_SQRT_HALF, 0.0, 0.0, _SQRT_HALF),   # phi+
    (_SQRT_HALF, 0.0, 0.0, -_SQRT_HALF),  # phi-
    (0.0, _SQRT_HALF, _SQRT_HALF, 0.0),   # psi+
    (0.0, _SQRT_HALF, -_SQRT_HALF, 0.0),  # psi-
)


@dataclass(frozen=True)
class BellDiagonalState:
    """Mixing parameters (x, y, z) of a Bell-diagonal state."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class PhysicalityCheck:
    """Outcome of the weight-positivity test, with one entry per violation."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def bell_weights(s: BellDiagonalState) -> tuple[float, float, float, float]:
    """Weights on (phi+, phi-, psi+, psi-), in canonical projector order."""
    return (
        (1.0 - s.x) / 4.0,
        (1.0 - s.y) / 4.0,
        (1.0 - s.z) / 4.0,
        (1.0 + s.x + s.y + s.z) / 4.0,
    )


def bell_spectrum(s: BellDiagonalState) -> Spectrum:
    """Sorted probability spectrum of a Bell-diagonal state."""
    return Spectrum.from_values(bell_weights(s), stochastic=True)


def is_physical(s: BellDiagonalState) -> PhysicalityCheck:
    """Check all four weights are nonnegative within WEIGHT_TOL."""
    violations = tuple(
        f"weight[{label}] = {w:.6g} is negative"
        for label, w in zip(WEIGHT_LABELS, bell_weights(s))
        if w < -WEIGHT_TOL
    )
    return PhysicalityCheck(ok=not violations, violations=violations)


def bell_projectors() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The four Bell projectors as 4x4 complex matrices, canonical order."""
    mats = []
    for ket in _BELL_KETS:
        v = np.asarray(ket, dtype=np.complex128)
        mats.append(np.outer(v, v.conj()))
    return tuple(mats)


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """A validated 4x4 density matrix.

    Construction checks Hermiticity (to 1e-10), unit trace (to 1e-11) and
    positive semidefiniteness (eigenvalues >= -1e-11); the eigenvalue
    spectrum is kept on the instance.
    """

    matrix: np.ndarray
    spectrum: Spectrum = field(init=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.matrix, dtype=np.complex128)
        if arr.shape != (4, 4):
            raise ValueError(f"density matrix must be 4x4, got shape {arr.shape}")
        spectrum = hermitian_eigenvalues(arr)
        trace = float(arr.trace().real)
        if abs(trace - 1.0) > 1e-11:
            raise UnphysicalStateError(f"density matrix trace is {trace!r}, expected 1")
        if spectrum.values[-1] < -1e-11:
            raise UnphysicalStateError(
                f"density matrix has negative eigenvalue {spectrum.values[-1]!r}"
            )
        object.__setattr__(self, "matrix", arr)
        object.__setattr__(self, "spectrum", spectrum)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "TwoQubitState":
        return cls(matrix=m)


def bell_diagonal_density(s: BellDiagonalState) -> TwoQubitState:
    """Density matrix sum_k w_k P_k of a physical Bell-diagonal state."""
    check = is_physical(s)
    if not check:
        raise UnphysicalStateError("; ".join(check.violations))
    weights = bell_weights(s)
    m = np.zeros((4, 4), dtype=np.complex128)
    for w, proj in zip(weights, bell_projectors()):
        m += w * proj
    return TwoQubitState(matrix=m)


def werner(x: float) -> BellDiagonalState:
    """The symmetric line (x, x, x), a psi- weight (1+3x)/4 mixed with noise."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"werner parameter must lie in [0, 1], got {x!r}")
    return BellDiagonalState(x, x, x)
