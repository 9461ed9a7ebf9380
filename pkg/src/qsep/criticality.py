"""Critical entropic index and the entanglement order parameter.

For an entangled Bell-diagonal state the conditional entropy S_q(B|A), seen
as a function of q, switches from convex to concave at a finite index q_I
(the inflexion point) and then dives towards minus infinity. Separable
states keep positive curvature on the whole searched range, so no inflexion
exists there. The order parameter

    eta = 1 / (1 + q_I)

is zero when q_I is absent and tends to one as a state approaches a Bell
vertex; at the exact vertices eta = 1 is assigned by that limit convention.

The search is resolution limited: close to the critical planes q_I grows
without bound, and any state whose q_I exceeds ``q_max`` (default 200)
reports no inflexion. Second derivatives come from central differences with
a q-proportional step, refined by bisection once a sign change is bracketed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import _cond_value
from .states import BellDiagonalState, bell_weights, is_physical
from .errors import UnphysicalStateError
from .separability import AxisSpec, grid_points

Q_FLOOR = 1e-3
Q_MAX_DEFAULT = 200.0
REFINE_TOL_DEFAULT = 1e-8
SEARCH_POINTS = 240
_VERTEX_TOL = 1e-12


def second_derivative(weights, q: float, h: float | None = None) -> float:
    """Central-difference d2/dq2 of the conditional entropy at fixed weights.

    The default step h = 1e-3 * max(1, q) keeps the relative truncation
    error roughly uniform across the log-spaced search grid.
    """
    if h is None:
        h = 1e-3 * max(1.0, q)
    f_minus = _cond_value(weights, q - h)
    f_zero = _cond_value(weights, q)
    f_plus = _cond_value(weights, q + h)
    return (f_plus - 2.0 * f_zero + f_minus) / (h * h)


@dataclass(frozen=True)
class CriticalityReport:
    """Inflexion search outcome plus the diagnostics behind it.

    ``bracket`` is the grid interval whose sign change was refined (None if
    none was found), with the second-derivative values at its ends;
    ``extra_brackets`` lists any further sign-change intervals on the grid.
    """

    q_inflexion: float | None
    eta: float
    bracket: tuple[float, float] | None
    d2_at_bracket: tuple[float, float] | None
    extra_brackets: tuple[tuple[float, float], ...]
    vertex: bool = False


def _require_physical(s: BellDiagonalState) -> tuple[float, float, float, float]:
    check = is_physical(s)
    if not check:
        raise UnphysicalStateError("; ".join(check.violations))
    return bell_weights(s)


def _search(weights, q_max: float, refine_tol: float) -> CriticalityReport:
    grid = np.geomspace(Q_FLOOR, q_max, SEARCH_POINTS)
    d2 = [second_derivative(weights, float(q)) for q in grid]
    brackets = []
    for k in range(len(grid) - 1):
        a, b = d2[k], d2[k + 1]
        if math.isfinite(a) and math.isfinite(b) and a * b < 0.0:
            brackets.append((float(grid[k]), float(grid[k + 1])))
    if not brackets:
        return CriticalityReport(None, 0.0, None, None, ())
    lo, hi = brackets[0]
    f_lo = second_derivative(weights, lo)
    f_hi = second_derivative(weights, hi)
    bracket_values = (f_lo, f_hi)
    while hi - lo > refine_tol:
        mid = 0.5 * (lo + hi)
        f_mid = second_derivative(weights, mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    q_inflexion = 0.5 * (lo + hi)
    return CriticalityReport(
        q_inflexion=q_inflexion,
        eta=1.0 / (1.0 + q_inflexion),
        bracket=brackets[0],
        d2_at_bracket=bracket_values,
        extra_brackets=tuple(brackets[1:]),
    )


def inflexion_point(s: BellDiagonalState, q_max: float = Q_MAX_DEFAULT,
                    refine_tol: float = REFINE_TOL_DEFAULT) -> float | None:
    """Smallest q in (Q_FLOOR, q_max] where the curvature of S_q(B|A) flips.

    Returns None when no sign change is found; states whose inflexion sits
    beyond q_max are indistinguishable from that case by construction.
    """
    weights = _require_physical(s)
    if max(weights) >= 1.0 - _VERTEX_TOL:
        return None
    return _search(weights, q_max, refine_tol).q_inflexion


def order_parameter(s: BellDiagonalState, q_max: float = Q_MAX_DEFAULT,
                    refine_tol: float = REFINE_TOL_DEFAULT) -> CriticalityReport:
    """Full inflexion report with eta = 1/(1 + q_I), or eta = 0 if absent.

    The four Bell vertices short-circuit to eta = 1 (the limit value along
    any ray into the vertex), reported with ``vertex=True``.
    """
    weights = _require_physical(s)
    if max(weights) >= 1.0 - _VERTEX_TOL:
        return CriticalityReport(None, 1.0, None, None, (), vertex=True)
    return _search(weights, q_max, refine_tol)


def eta_field(x_spec: AxisSpec, y_spec: AxisSpec, z_spec: AxisSpec,
              q_max: float = Q_MAX_DEFAULT) -> tuple[tuple[float, float, float, float], ...]:
    """Order parameter over the physical cells of a grid, x-major order."""
    xs = grid_points(x_spec, "x")
    ys = grid_points(y_spec, "y")
    zs = grid_points(z_spec, "z")
    rows = []
    for x in xs:
        for y in ys:
            for z in zs:
                s = BellDiagonalState(x, y, z)
                if is_physical(s):
                    rows.append((x, y, z, order_parameter(s, q_max=q_max).eta))
    return tuple(rows)
