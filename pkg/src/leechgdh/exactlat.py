"""Exact lattices: basis rows over Q with a scaled standard inner product.

A lattice carries its basis in ambient coordinates together with a rational
``scale``; the ambient inner product is ``scale * (x . y)``.  This keeps
lattices such as sqrt(2) D12+ or the Leech lattice (1/sqrt(8) times an
integral lattice) entirely rational.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from . import linalg

Vector = tuple[Fraction, ...]

DATA_ENV = "LEECHGDH_DATA"


def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    return Path(override) if override else Path(__file__).with_name("data")


def as_vector(values: Iterable[object]) -> Vector:
    return tuple(Fraction(x) for x in values)


@dataclass(frozen=True)
class ExactLattice:
    basis: tuple[Vector, ...]
    scale: Fraction = Fraction(1)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        rows = tuple(as_vector(r) for r in self.basis)
        object.__setattr__(self, "basis", rows)
        object.__setattr__(self, "scale", Fraction(self.scale))
        if not rows:
            raise ValueError("a lattice needs at least one basis row")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged basis")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        # Positive definiteness (and hence independence) via exact LDL.
        linalg.ldl(self.gram)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> int:
        return len(self.basis[0])

    def inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return self.scale * linalg.dot(x, y)

    def norm(self, x: Sequence[Fraction]) -> Fraction:
        return self.inner(x, x)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        b = self.basis
        return tuple(tuple(self.inner(b[i], b[j]) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def gram_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(map(tuple, linalg.inverse(self.gram)))

    @cached_property
    def determinant(self) -> Fraction:
        return linalg.det(self.gram)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def is_even(self) -> bool:
        return self.is_integral() and all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def vector(self, coeffs: Sequence[object]) -> Vector:
        """Ambient vector with the given basis coefficients."""
        return tuple(linalg.vecmat([Fraction(c) for c in coeffs], self.basis))

    def coordinates(self, v: Sequence[object]) -> Vector:
        """Basis coefficients of an ambient vector in the real span of the lattice."""
        c = linalg.solve_left(self.basis, as_vector(v))
        if c is None:
            raise ValueError("vector is not in the span of the lattice")
        return tuple(c)

    def contains(self, v: Sequence[object]) -> bool:
        try:
            c = self.coordinates(v)
        except ValueError:
            return False
        return all(x.denominator == 1 for x in c)

    def scaled(self, factor: object, name: str = "") -> "ExactLattice":
        """The lattice with every basis row multiplied by ``factor``."""
        f = Fraction(factor)
        return ExactLattice(tuple(tuple(f * x for x in row) for row in self.basis), self.scale, name)

    def with_basis(self, transform: Sequence[Sequence[int]], name: str = "") -> "ExactLattice":
        """Same ambient frame, basis rows replaced by ``transform @ basis``."""
        rows = linalg.matmul(linalg.to_fraction_matrix(transform), self.basis)
        return ExactLattice(tuple(map(tuple, rows)), self.scale, name or self.name)


@dataclass(frozen=True)
class Coset:
    lattice: ExactLattice
    shift: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "shift", as_vector(self.shift))
        if len(self.shift) != self.lattice.ambient:
            raise ValueError("shift has the wrong dimension")

    def __contains__(self, v: Sequence[object]) -> bool:
        w = as_vector(v)
        return self.lattice.contains(tuple(a - b for a, b in zip(w, self.shift)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coset) or other.lattice != self.lattice:
            return NotImplemented
        return self.lattice.contains(tuple(a - b for a, b in zip(self.shift, other.shift)))

    def __hash__(self) -> int:
        # Equality is modulo the lattice, so hash only the lattice.
        return hash(self.lattice)


def lattice_from_generators(
    rows: Sequence[Sequence[object]], scale: object = 1, name: str = ""
) -> ExactLattice:
    """Lattice spanned over Z by possibly dependent rational generators."""
    frac_rows = linalg.to_fraction_matrix(rows)
    den = linalg.common_denominator(x for r in frac_rows for x in r)
    ints = [[int(x * den) for x in r] for r in frac_rows]
    basis = linalg.integer_row_basis(ints)
    return ExactLattice(
        tuple(tuple(Fraction(x, den) for x in r) for r in basis), Fraction(scale), name
    )


# --- LLL -------------------------------------------------------------------


def lll_transform(
    gram: Sequence[Sequence[Fraction]], delta: Fraction = Fraction(3, 4)
) -> list[list[int]]:
    """Unimodular ``U`` such that ``U gram U^T`` is LLL-reduced with parameter delta.

    Works on the Gram matrix alone, in exact rationals.
    """
    n = len(gram)
    g = [list(map(Fraction, row)) for row in gram]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n

    def gso_row(i: int) -> None:
        for j in range(i):
            mu[i][j] = (g[i][j] - sum((mu[j][k] * mu[i][k] * bstar[k] for k in range(j)), Fraction(0))) / bstar[j]
        bstar[i] = g[i][i] - sum((mu[i][k] ** 2 * bstar[k] for k in range(i)), Fraction(0))

    def reduce(k: int, l: int) -> None:
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = round(mu[k][l])
        u[k] = [a - q * b for a, b in zip(u[k], u[l])]
        # b_k <- b_k - q b_l on the Gram matrix.
        gkk, gkl, gll = g[k][k], g[k][l], g[l][l]
        for j in range(n):
            g[k][j] -= q * g[l][j]
        g[k][k] = gkk - 2 * q * gkl + q * q * gll
        for j in range(n):
            g[j][k] = g[k][j]
        mu[k][l] -= q
        for j in range(l):
            mu[k][j] -= q * mu[l][j]

    for i in range(n):
        gso_row(i)
    k = 1
    while k < n:
        reduce(k, k - 1)
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            _swap(k, n, g, u, mu, bstar)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return u


def _swap(k, n, g, u, mu, bstar) -> None:
    u[k], u[k - 1] = u[k - 1], u[k]
    g[k], g[k - 1] = g[k - 1], g[k]
    for row in g:
        row[k], row[k - 1] = row[k - 1], row[k]
    for j in range(k - 1):
        mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
    m = mu[k][k - 1]
    b = bstar[k] + m * m * bstar[k - 1]
    mu[k][k - 1] = m * bstar[k - 1] / b
    bstar[k] = bstar[k - 1] * bstar[k] / b
    bstar[k - 1] = b
    for i in range(k + 1, n):
        t = mu[i][k]
        mu[i][k] = mu[i][k - 1] - m * t
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]


def is_lll_reduced(gram: Sequence[Sequence[Fraction]], delta: Fraction = Fraction(3, 4)) -> bool:
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            mu[i][j] = (Fraction(gram[i][j]) - sum((mu[j][k] * mu[i][k] * bstar[k] for k in range(j)), Fraction(0))) / bstar[j]
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
        bstar[i] = Fraction(gram[i][i]) - sum((mu[i][k] ** 2 * bstar[k] for k in range(i)), Fraction(0))
    return all(bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1] for k in range(1, n))


def lll_reduce(lattice: ExactLattice, delta: Fraction = Fraction(3, 4)) -> ExactLattice:
    u = lll_transform(lattice.gram, delta)
    if abs(linalg.det(linalg.to_fraction_matrix(u))) != 1:
        raise AssertionError("LLL transform is not unimodular")
    reduced = lattice.with_basis(u)
    expected = linalg.matmul(linalg.matmul(linalg.to_fraction_matrix(u), lattice.gram), linalg.transpose(u))
    if [list(r) for r in reduced.gram] != expected:
        raise AssertionError("Gram matrix mismatch after LLL")
    return reduced


# --- duals and the concrete lattices -----------------------------------------


def dual_lattice(lattice: ExactLattice) -> ExactLattice:
    """Dual lattice inside the span: basis ``gram^{-1} @ basis``."""
    rows = linalg.matmul(lattice.gram_inverse, lattice.basis)
    return ExactLattice(tuple(map(tuple, rows)), lattice.scale, f"dual({lattice.name})")


def dual_scale_half(lattice: ExactLattice) -> ExactLattice:
    return lattice.scaled(Fraction(1, 2), f"{lattice.name}/2")


def same_lattice(a: ExactLattice, b: ExactLattice) -> bool:
    """True iff both bases span the same subset of the ambient space."""
    if a.ambient != b.ambient or a.rank != b.rank or a.scale != b.scale:
        return False
    return all(a.contains(r) for r in b.basis) and all(b.contains(r) for r in a.basis)


def d12plus_scaled() -> ExactLattice:
    """K = sqrt(2) D12+, stored in D12+ coordinates with inner-product scale 2."""
    gens: list[list[Fraction]] = []
    for i in range(11):
        v = [Fraction(0)] * 12
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        gens.append(v)
    v = [Fraction(0)] * 12
    v[10] = v[11] = Fraction(1)
    gens.append(v)
    gens.append([Fraction(1, 2)] * 12)
    lat = lattice_from_generators(gens, scale=2, name="K")
    lat = lll_reduce(lat)
    lat = ExactLattice(lat.basis, lat.scale, "K")
    if lat.rank != 12 or lat.determinant != 2**12 or not lat.is_even():
        raise AssertionError("D12+ construction failed")
    return lat


def in_d12plus(x: Sequence[Fraction]) -> bool:
    """Membership in D12+ from the coordinate description."""
    x = as_vector(x)
    if all(c.denominator == 1 for c in x):
        pass
    elif all((c - Fraction(1, 2)).denominator == 1 for c in x):
        pass
    else:
        return False
    return sum(x).denominator == 1 and sum(x) % 2 == 0


# --- lattice files -----------------------------------------------------------


def lattice_to_json(lattice: ExactLattice) -> dict:
    return {
        "rank": lattice.rank,
        "ambient": lattice.ambient,
        "scale": [lattice.scale.numerator, lattice.scale.denominator],
        "basis": [[[x.numerator, x.denominator] for x in row] for row in lattice.basis],
        "name": lattice.name,
    }


def _pair(p: object) -> Fraction:
    if isinstance(p, int):
        return Fraction(p)
    if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)):
        raise ValueError(f"expected an integer pair [num, den], got {p!r}")
    if p[1] == 0:
        raise ValueError("zero denominator in lattice file")
    return Fraction(p[0], p[1])


def lattice_from_json(obj: dict) -> ExactLattice:
    try:
        rank, ambient, rows = obj["rank"], obj["ambient"], obj["basis"]
    except KeyError as exc:
        raise ValueError(f"lattice file is missing {exc}") from None
    basis = tuple(tuple(_pair(p) for p in row) for row in rows)
    if len(basis) != rank or any(len(r) != ambient for r in basis):
        raise ValueError("lattice file rank/ambient do not match the basis")
    scale = _pair(obj.get("scale", [1, 1]))
    return ExactLattice(basis, scale, obj.get("name", ""))


def read_lattice(path: str | os.PathLike) -> ExactLattice:
    with open(path, encoding="utf-8") as fh:
        return lattice_from_json(json.load(fh))


def write_lattice(lattice: ExactLattice, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(lattice_to_json(lattice), fh)
        fh.write("\n")


@lru_cache(maxsize=None)
def leech_lattice() -> ExactLattice:
    """The bundled Leech lattice basis, validated on load."""
    lat = read_lattice(data_dir() / "leech.json")
    if lat.rank != 24 or lat.determinant != 1:
        raise AssertionError("bundled Leech basis is not unimodular of rank 24")
    if not lat.is_even():
        raise AssertionError("bundled Leech basis is not even")
    from .enumeration import shortest_nonzero_norm

    if shortest_nonzero_norm(lat) != 4:
        raise AssertionError("bundled Leech basis has roots")
    return lat


def build_leech_from_golay() -> ExactLattice:
    """Rebuild the Leech lattice from the Golay code (used to regenerate the data file)."""
    from .golay import leech_generators

    lat = lattice_from_generators(leech_generators(), scale=Fraction(1, 8), name="Leech")
    lat = lll_reduce(lat)
    return ExactLattice(lat.basis, lat.scale, "Leech")
