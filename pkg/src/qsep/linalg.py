"""Dense complex linear algebra for 2x2 and 4x4 Hermitian operators.

Everything here works on numpy arrays of complex128. Composite operators on
two qubits use the row index convention 2*i_A + i_B, so the first tensor
factor is the slow index. Eigenvalues come from a cyclic Jacobi solver so the
package does not depend on LAPACK behaviour for its core results; tests
cross-check it against an independent solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ConvergenceError

# Eigenvalues at or below this are treated as zero; power sums run over the
# support only, which keeps q <= 0 well defined for rank-deficient spectra.
EPS_SUPPORT = 1e-12
HERMITICITY_TOL = 1e-10
# Jacobi convergence: largest off-diagonal magnitude after a full sweep.
OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100
STOCHASTIC_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues stored in descending order.

    ``stochastic`` marks spectra that are probability weights: nonnegative
    within STOCHASTIC_TOL and summing to one within the same tolerance.
    Entropy functions require that flag; raw operator spectra (for example a
    partial transpose with a negative eigenvalue) simply carry it as False.
    """

    values: tuple[float, ...]
    stochastic: bool

    @classmethod
    def from_values(cls, values: Iterable[float], stochastic: bool | None = None) -> "Spectrum":
        vals = tuple(sorted((float(v) for v in values), reverse=True))
        if not vals:
            raise ValueError("spectrum needs at least one eigenvalue")
        if any(not math.isfinite(v) for v in vals):
            raise ValueError("spectrum values must be finite")
        total = math.fsum(vals)
        looks_stochastic = abs(total - 1.0) <= STOCHASTIC_TOL and vals[-1] >= -STOCHASTIC_TOL
        if stochastic is None:
            stochastic = looks_stochastic
        elif stochastic and not looks_stochastic:
            raise ValueError(
                f"values are not a probability spectrum: sum = {total!r}, min = {vals[-1]!r}"
            )
        return cls(values=vals, stochastic=bool(stochastic))

    @classmethod
    def uniform(cls, dim: int) -> "Spectrum":
        if dim < 1:
            raise ValueError("dimension must be positive")
        return cls(values=(1.0 / dim,) * dim, stochastic=True)

    @property
    def dim(self) -> int:
        return len(self.values)


def _as_operator(m: np.ndarray, dims: tuple[int, ...], name: str = "matrix") -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be square, got shape {arr.shape}")
    if arr.shape[0] not in dims:
        raise ValueError(f"{name} must have dimension in {dims}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two single-qubit operators."""
    a = _as_operator(a, (2,), "a")
    b = _as_operator(b, (2,), "b")
    return np.kron(a, b)


def partial_trace(m: np.ndarray, keep: str) -> np.ndarray:
    """Trace out one qubit of a two-qubit operator, keeping subsystem A or B."""
    arr = _as_operator(m, (4,))
    t = arr.reshape(2, 2, 2, 2)  # axes (i_A, i_B, j_A, j_B)
    if keep == "A":
        return np.einsum("ikjk->ij", t)
    if keep == "B":
        return np.einsum("ikil->kl", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_transpose(m: np.ndarray, on: str) -> np.ndarray:
    """Transpose one tensor factor of a two-qubit operator."""
    arr = _as_operator(m, (4,))
    t = arr.reshape(2, 2, 2, 2)
    if on == "A":
        out = t.transpose(2, 1, 0, 3)
    elif on == "B":
        out = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"on must be 'A' or 'B', got {on!r}")
    return out.reshape(4, 4).copy()


def _jacobi_eigenvalues(a: np.ndarray) -> list[float]:
    """Cyclic Jacobi diagonalisation of a Hermitian matrix.

    Each step applies an exact 2x2 unitary rotation (a real Givens rotation
    composed with a phase) that annihilates one off-diagonal pair. Sweeps
    repeat until the largest off-diagonal magnitude drops below OFFDIAG_TOL;
    more than MAX_SWEEPS sweeps raises ConvergenceError.
    """
    a = a.copy()
    n = a.shape[0]
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    others = {pq: [i for i in range(n) if i not in pq] for pq in pairs}
    for _ in range(MAX_SWEEPS):
        off = max(abs(a[p, q]) for p, q in pairs)
        if off < OFFDIAG_TOL:
            return [float(a[i, i].real) for i in range(n)]
        for p, q in pairs:
            apq = a[p, q]
            mag = abs(apq)
            if mag < OFFDIAG_TOL * 1e-2:
                continue
            phase = apq / mag
            app = a[p, p].real
            aqq = a[q, q].real
            tau = (aqq - app) / (2.0 * mag)
            if tau >= 0.0:
                t = 1.0 / (tau + math.hypot(1.0, tau))
            else:
                t = -1.0 / (-tau + math.hypot(1.0, tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            phase_c = np.conj(phase)
            for i in others[(p, q)]:
                vip = a[i, p]
                viq = a[i, q]
                a[i, p] = c * vip - phase_c * s * viq
                a[i, q] = s * vip + phase_c * c * viq
                a[p, i] = np.conj(a[i, p])
                a[q, i] = np.conj(a[i, q])
            a[p, p] = app - t * mag
            a[q, q] = aqq + t * mag
            a[p, q] = 0.0
            a[q, p] = 0.0
    raise ConvergenceError(
        f"Jacobi eigensolver did not converge within {MAX_SWEEPS} sweeps"
    )


def hermitian_eigenvalues(m: np.ndarray) -> Spectrum:
    """Eigenvalues of a Hermitian 2x2 or 4x4 matrix, descending.

    Inputs may deviate from exact Hermiticity by at most HERMITICITY_TOL in
    any entry; the matrix is symmetrised before solving. Probability spectra
    (sum one, nonnegative) come back flagged stochastic.
    """
    arr = _as_operator(m, (2, 4))
    asym = arr - arr.conj().T
    amax_flat = int(np.argmax(np.abs(asym)))
    i, j = np.unravel_index(amax_flat, asym.shape)
    amax = abs(asym[i, j])
    if amax > HERMITICITY_TOL:
        raise ValueError(
            f"matrix is not Hermitian: max |m - m^H| = {amax:.3e} at entry ({i}, {j})"
        )
    sym = (arr + arr.conj().T) / 2.0
    return Spectrum.from_values(_jacobi_eigenvalues(sym))


def _pow(base: float, q: float) -> float:
    # base > 0; overflow saturates instead of raising so callers can treat
    # divergent power sums as an infinite result with the right sign.
    try:
        return base**q
    except OverflowError:
        return math.inf


def trace_power(s: Spectrum, q: float) -> float:
    """Sum of lambda^q over the support (eigenvalues above EPS_SUPPORT)."""
    if not s.stochastic:
        raise ValueError("trace_power requires a stochastic spectrum")
    if not math.isfinite(q):
        raise ValueError("q must be finite")
    return math.fsum(_pow(v, q) for v in s.values if v > EPS_SUPPORT)
