"""Tsallis entropies and the quotient-form conditional entropy they induce.

The one-parameter family S_q = (1 - sum_i p_i^q) / (q - 1) recovers the von
Neumann entropy -sum p ln p as q -> 1 (natural logarithms throughout). For a
product state the family is pseudoadditive,

    S_q(A+B) = S_q(A) + S_q(B) + (1 - q) S_q(A) S_q(B),

and the conditional entropy is the matching quotient

    S_q(B|A) = (S_q(A+B) - S_q(A)) / (1 + (1 - q) S_q(A)),

whose denominator equals the power sum of the reduced spectrum. Both reduced
states of a Bell-diagonal state are maximally mixed, so S_q(B|A) = S_q(A|B)
there, with the closed form

    S_q(B|A) = (2 - sum_k (2 w_k)^q) / (2 (q - 1)).

The rescaled weights 2 w_k keep that expression finite far beyond the range
where 2^(1-q) underflows, which matters for scans with large q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import UnphysicalStateError
from .linalg import EPS_SUPPORT, Spectrum, trace_power, _pow
from .states import BellDiagonalState, bell_weights, is_physical


def tsallis_entropy(s: Spectrum, q: float) -> float:
    """Entropy of a probability spectrum at entropic index q.

    Rank-deficient spectra are evaluated on their support, which keeps
    q <= 0 finite. The result is nonnegative for every q.
    """
    if not s.stochastic:
        raise ValueError("tsallis_entropy requires a stochastic spectrum")
    if not math.isfinite(q):
        raise ValueError("q must be finite")
    if q == 1.0:
        return -math.fsum(v * math.log(v) for v in s.values if v > EPS_SUPPORT)
    return (1.0 - trace_power(s, q)) / (q - 1.0)


def pseudoadditive_combine(sa: float, sb: float, q: float) -> float:
    """Combine independent-subsystem entropies: sa + sb + (1-q) sa sb."""
    return sa + sb + (1.0 - q) * sa * sb


def conditional_entropy(joint: Spectrum, reduced: Spectrum, q: float) -> float:
    """Abe-Rajagopal conditional entropy from joint and reduced spectra."""
    denominator = 1.0 if q == 1.0 else trace_power(reduced, q)
    if abs(denominator) < 1e-300:
        raise ValueError("conditional entropy denominator vanished")
    numerator = tsallis_entropy(joint, q) - tsallis_entropy(reduced, q)
    return numerator / denominator


@dataclass(frozen=True)
class ConditionalEntropyValue:
    """A conditional-entropy sample; both directions agree for Bell-diagonal
    states because each reduced state is maximally mixed."""

    value: float
    q: float
    direction: str = "B|A"


def rescaled_power_sum(weights: Sequence[float], q: float) -> float:
    """sum_k (2 w_k)^q over the support of a Bell-weight tuple.

    This is the large-q-stable core of the Bell-diagonal closed forms: the
    conditional entropy compares it against the constant 2 instead of
    comparing raw power sums against 2^(1-q).
    """
    return math.fsum(_pow(2.0 * w, q) for w in weights if w > EPS_SUPPORT)


def _cond_value(weights: Sequence[float], q: float) -> float:
    if q == 1.0:
        joint = -math.fsum(w * math.log(w) for w in weights if w > EPS_SUPPORT)
        return joint - math.log(2.0)
    return (2.0 - rescaled_power_sum(weights, q)) / (2.0 * (q - 1.0))


def conditional_entropy_bell(s: BellDiagonalState, q: float) -> ConditionalEntropyValue:
    """Closed-form conditional entropy of a physical Bell-diagonal state."""
    if not math.isfinite(q):
        raise ValueError("q must be finite")
    check = is_physical(s)
    if not check:
        raise UnphysicalStateError("; ".join(check.violations))
    return ConditionalEntropyValue(value=_cond_value(bell_weights(s), q), q=q)


def chain_rule_check(a: Spectrum, b_given_a: float, q: float) -> float:
    """Rebuild the joint entropy from S_q(A) and S_q(B|A).

    Returns S_q(A) + S_q(B|A) + (1-q) S_q(A) S_q(B|A), which must equal
    S_q(A+B) whenever b_given_a really is the conditional entropy.
    """
    return pseudoadditive_combine(tsallis_entropy(a, q), b_given_a, q)
