"""Deterministic random-draw helpers shared by the test modules."""

from __future__ import annotations

import numpy as np


def random_physical_triples(rng: np.random.Generator, n: int) -> list[tuple[float, float, float]]:
    """Uniform draws over the Bell-weight simplex, returned as (x, y, z)."""
    draws = rng.dirichlet(np.ones(4), size=n)
    return [
        (1.0 - 4.0 * w1, 1.0 - 4.0 * w2, 1.0 - 4.0 * w3)
        for w1, w2, w3, _ in draws
    ]


def random_qubit_density(rng: np.random.Generator, floor: float = 0.3) -> np.ndarray:
    """A random single-qubit density matrix with spectrum >= floor/2.

    Mixing with the maximally mixed state keeps every eigenvalue bounded away
    from zero, so power sums stay well conditioned at negative q.
    """
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    rho = m @ m.conj().T
    rho = rho / rho.trace().real
    return (1.0 - floor) * rho + floor * np.eye(2) / 2.0


def random_octahedron_interior(rng: np.random.Generator, n: int,
                               margin: float = 1e-3) -> list[tuple[float, float, float]]:
    """Points strictly inside the max-weight <= 1/2 octahedron."""
    points: list[tuple[float, float, float]] = []
    while len(points) < n:
        x, y, z = rng.uniform(-1.0 + margin, 1.0 - margin, size=3)
        if -1.0 + margin <= x + y + z <= 1.0 - margin:
            points.append((float(x), float(y), float(z)))
    return points
