"""Independent oracles shared by the tests: brute-force box enumeration."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from leechgdh import linalg
from leechgdh.enumeration import Mode
from leechgdh.exactlat import ExactLattice

BOX_LIMIT = 40_000


def random_lattice(rng: np.random.Generator, max_rank: int = 6) -> ExactLattice:
    """Random full-rank integer lattice of rank <= max_rank, with a random rational scale."""
    while True:
        n = int(rng.integers(1, max_rank + 1))
        b = rng.integers(-3, 4, size=(n, n))
        if round(abs(np.linalg.det(b))) == 0:
            continue
        scale = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 3)))
        lat = ExactLattice(tuple(map(tuple, b.tolist())), scale)
        target = tuple(Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5))) for _ in range(n))
        # Radius: the exact distance to a random nearby lattice point, so shells are non-empty.
        c = rng.integers(-2, 3, size=n)
        p = lat.vector(c.tolist())
        radius = lat.norm(tuple(x - y for x, y in zip(p, target)))
        if box_size(lat, target, radius) <= BOX_LIMIT:
            return lat, target, radius


def _box(lat: ExactLattice, target, radius):
    coords = lat.coordinates(target)
    ginv = lat.gram_inverse
    out = []
    for i, t in enumerate(coords):
        half = math.sqrt(float(radius * ginv[i][i])) + 1e-9
        out.append(range(math.floor(t - half), math.ceil(t + half) + 1))
    return out


def box_size(lat, target, radius) -> int:
    return math.prod(len(r) for r in _box(lat, target, radius))


def brute_force(lat: ExactLattice, target, radius, mode: Mode) -> set[tuple[int, ...]]:
    """Coefficient vectors in a box that provably contains the ball (|c_i - t_i|^2 <= R G^-1_ii)."""
    den = linalg.common_denominator([x for row in lat.basis for x in row] + list(target))
    b = np.array([[int(x * den) for x in row] for row in lat.basis], dtype=object)
    t = np.array([int(x * den) for x in target], dtype=object)
    out = set()
    for c in itertools.product(*_box(lat, target, radius)):
        x = np.array(c, dtype=object) @ b - t
        q = lat.scale * Fraction(int(x @ x), den * den)
        if q == radius if mode is Mode.EXACT_SHELL else q <= radius:
            out.add(tuple(int(v) for v in c))
    return out
