"""Extended binary Golay code and the Leech lattice generators built from it.

Coordinates are indexed 0..23 with 23 playing the role of the point at
infinity of the projective line over GF(23).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

INF = 23
QUADRATIC_RESIDUES = frozenset(pow(x, 2, 23) for x in range(1, 23))


def _gf2_reduce(rows: list[int]) -> list[int]:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return basis


@lru_cache(maxsize=None)
def golay_basis() -> tuple[int, ...]:
    """Twelve generators of the extended quadratic-residue code, as 24-bit masks."""
    rows = []
    for shift in range(23):
        support = {(shift + q) % 23 for q in QUADRATIC_RESIDUES | {0}}
        mask = sum(1 << i for i in support)
        if len(support) % 2:
            mask |= 1 << INF
        rows.append(mask)
    rows.append((1 << 24) - 1)
    basis = _gf2_reduce(rows)
    if len(basis) != 12:
        raise AssertionError(f"Golay code has dimension {len(basis)}, expected 12")
    return tuple(basis)


@lru_cache(maxsize=None)
def golay_codewords() -> tuple[int, ...]:
    words = []
    basis = golay_basis()
    for bits in product((0, 1), repeat=12):
        w = 0
        for bit, b in zip(bits, basis):
            if bit:
                w ^= b
        words.append(w)
    return tuple(sorted(words))


def weight_distribution() -> dict[int, int]:
    dist: dict[int, int] = {}
    for w in golay_codewords():
        k = bin(w).count("1")
        dist[k] = dist.get(k, 0) + 1
    return dist


def leech_generators() -> list[list[int]]:
    """Integer generators of sqrt(8) times the Leech lattice."""
    gens = []
    for w in golay_basis():
        gens.append([2 * ((w >> i) & 1) for i in range(24)])
    for i in range(23):
        v = [0] * 24
        v[i], v[i + 1] = 4, -4
        gens.append(v)
    v = [0] * 24
    v[0] = v[1] = 4
    gens.append(v)
    gens.append([-3] + [1] * 23)
    return gens


def _mobius(a: int, b: int, c: int, d: int):
    """x -> (a x + b) / (c x + d) on the projective line over GF(23)."""

    def f(x: int) -> int:
        if x == INF:
            return INF if c == 0 else a * pow(c, -1, 23) % 23
        num, den = (a * x + b) % 23, (c * x + d) % 23
        return INF if den == 0 else num * pow(den, -1, 23) % 23

    return tuple(f(x) for x in range(24))


def _delta() -> tuple[int, ...]:
    # Conway's extra generator taking PSL(2,23) up to M24.
    def f(x: int) -> int:
        if x == INF:
            return INF
        if x == 0:
            return 0
        cube = pow(x, 3, 23)
        return cube * pow(9, -1, 23) % 23 if x in QUADRATIC_RESIDUES else 9 * cube % 23

    return tuple(f(x) for x in range(24))


def m24_generators() -> list[tuple[int, ...]]:
    return [
        _mobius(1, 1, 0, 1),   # x -> x + 1
        _mobius(2, 0, 0, 1),   # x -> 2x
        _mobius(0, -1, 1, 0),  # x -> -1/x
        _delta(),
    ]


def permute_word(perm: tuple[int, ...], word: int) -> int:
    out = 0
    for i in range(24):
        if (word >> i) & 1:
            out |= 1 << perm[i]
    return out


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``q`` first, then ``p``."""
    return tuple(p[q[i]] for i in range(len(q)))


def cycle_type(perm: tuple[int, ...]) -> dict[int, int]:
    seen = [False] * len(perm)
    out: dict[int, int] = {}
    for i in range(len(perm)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            out[length] = out.get(length, 0) + 1
    return out


def power(perm: tuple[int, ...], k: int) -> tuple[int, ...]:
    out = tuple(range(len(perm)))
    for _ in range(k):
        out = compose(perm, out)
    return out


def cycle_type_string(perm: tuple[int, ...]) -> str:
    ct = cycle_type(perm)
    return " ".join(f"{t}" if b == 1 else f"{t}^{b}" for t, b in sorted(ct.items()))


@lru_cache(maxsize=None)
def m24_class_representatives(seed: int = 24) -> dict[str, tuple[int, ...]]:
    """One permutation per cycle type of M24, found by a seeded random walk.

    M24 has 21 distinct cycle types; the walk stops once all are seen.
    """
    import random

    rng = random.Random(seed)
    gens = m24_generators()
    g = tuple(range(24))
    found: dict[str, tuple[int, ...]] = {cycle_type_string(g): g}
    for _ in range(200000):
        g = compose(rng.choice(gens), g)
        if cycle_type_string(g) not in found:
            # Powers of a new element often reach rare classes.
            for k in range(1, 25):
                found.setdefault(cycle_type_string(power(g, k)), power(g, k))
        if len(found) == 21:
            break
    if len(found) != 21:
        raise AssertionError(f"found only {len(found)} M24 cycle types")
    return dict(sorted(found.items()))


def permutation_doubles(perm: tuple[int, ...]) -> bool:
    """Order doubling of a coordinate permutation acting on the Leech lattice.

    With m the order and tau = perm^(m/2), the standard lift doubles its
    order iff <a, tau a> is odd for some lattice vector a.  The map
    a -> <a, tau a> mod 2 is additive (tau is an isometric involution), so
    checking generators suffices.  Coordinates carry the 1/8 scaling.
    """
    from math import lcm

    m = lcm(*cycle_type(perm))
    if m % 2:
        return False
    tau = power(perm, m // 2)
    for v in leech_generators():
        w = [0] * 24
        for i in range(24):
            w[tau[i]] = v[i]
        ip = sum(a * b for a, b in zip(v, w))
        if ip % 8:
            raise AssertionError("non-integral inner product")
        if (ip // 8) % 2:
            return True
    return False
