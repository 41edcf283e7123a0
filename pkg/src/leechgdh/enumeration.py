"""Exact close-vector enumeration (Fincke-Pohst with exact re-verification).

The walk itself runs in floating point over an LLL-reduced LDL^T
decomposition, padded by a small tolerance so it can only over-report.  Every
candidate is then re-checked in integer arithmetic, so the returned sets are
exact.  A compiled walker is used when the extension is built; otherwise the
pure-Python one.  Set ``LEECHGDH_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _kernel_py, linalg
from .exactlat import Coset, ExactLattice, Vector, as_vector, lll_transform

try:  # pragma: no cover - depends on the build
    if os.environ.get("LEECHGDH_PURE"):
        raise ImportError("pure kernel forced")
    from ._kernel import enumerate_candidates as _compiled_kernel
except ImportError:  # pragma: no cover
    _compiled_kernel = None

KERNELS = {"python": _kernel_py.enumerate_candidates}
if _compiled_kernel is not None:
    KERNELS["compiled"] = _compiled_kernel
DEFAULT_KERNEL = "compiled" if _compiled_kernel is not None else "python"
DEFAULT_CAP = 10**7


class Mode(str, Enum):
    EXACT_SHELL = "shell"
    BALL = "ball"


class EnumerationLimitError(RuntimeError):
    """Raised when a query produces more candidates than the cap allows."""


@dataclass(frozen=True)
class SphereQuery:
    lattice: ExactLattice
    target: Vector
    radius_sq: Fraction
    mode: Mode = Mode.BALL

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", as_vector(self.target))
        object.__setattr__(self, "radius_sq", Fraction(self.radius_sq))
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.radius_sq < 0:
            raise ValueError("radius_sq must be non-negative")
        if len(self.target) != self.lattice.ambient:
            raise ValueError("target dimension does not match the lattice")


@dataclass(frozen=True, eq=False)
class VectorSet:
    """Lattice vectors found by a query, sorted by ambient coordinates.

    ``coeffs`` holds integer coordinates in the lattice's own basis; ambient
    vectors are built lazily since big shells would be slow as Fractions.
    """

    lattice: ExactLattice
    coeffs: np.ndarray
    radius_sq: Fraction

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorSet):
            return NotImplemented
        return self.vectors == other.vectors and self.radius_sq == other.radius_sq

    @cached_property
    def vectors(self) -> tuple[Vector, ...]:
        num, den = self.scaled_vectors
        return tuple(tuple(Fraction(int(x), den) for x in row) for row in num)

    @cached_property
    def scaled_vectors(self) -> tuple[np.ndarray, int]:
        """Ambient vectors as an integer array ``num`` with common denominator ``den``."""
        return _ambient(self.lattice, self.coeffs)


@dataclass(frozen=True)
class _Prepared:
    transform: np.ndarray  # reduced basis = transform @ original basis
    low: np.ndarray
    d: np.ndarray
    gram_num: np.ndarray
    gram_den: int
    low_exact: tuple
    d_exact: tuple
    reduced_inverse: tuple | None  # inverse of the reduced basis when it is square
    reduced_basis: tuple


@lru_cache(maxsize=64)
def _prepare(lattice: ExactLattice) -> _Prepared:
    u = lll_transform(lattice.gram)
    reduced = linalg.matmul(linalg.matmul(linalg.to_fraction_matrix(u), lattice.gram), linalg.transpose(u))
    low, d = linalg.ldl(reduced)
    rbasis = linalg.matmul(linalg.to_fraction_matrix(u), lattice.basis)
    den = linalg.common_denominator(x for row in reduced for x in row)
    gram_num = np.array([[int(x * den) for x in row] for row in reduced], dtype=object)
    return _Prepared(
        transform=np.array(u, dtype=object),
        low=np.array([[float(x) for x in row] for row in low]),
        d=np.array([float(x) for x in d]),
        gram_num=gram_num,
        gram_den=den,
        low_exact=tuple(map(tuple, low)),
        d_exact=tuple(d),
        reduced_inverse=tuple(map(tuple, linalg.inverse(rbasis))) if lattice.rank == lattice.ambient else None,
        reduced_basis=tuple(map(tuple, rbasis)),
    )


def _reduced_coords(prep: _Prepared, target: Sequence[object]) -> list[Fraction]:
    """Coordinates of ``target`` in the LLL-reduced basis."""
    t = as_vector(target)
    if prep.reduced_inverse is not None:
        return linalg.vecmat(t, prep.reduced_inverse)
    c = linalg.solve_left(prep.reduced_basis, t)
    if c is None:
        raise ValueError("vector is not in the span of the lattice")
    return c


def _ambient(lattice: ExactLattice, coeffs: np.ndarray) -> tuple[np.ndarray, int]:
    den = linalg.common_denominator(x for row in lattice.basis for x in row)
    basis = np.array([[int(x * den) for x in row] for row in lattice.basis], dtype=object)
    if len(coeffs) == 0:
        return np.zeros((0, lattice.ambient), dtype=object), den
    big = int(np.abs(coeffs).max()) * int(max(abs(v) for v in basis.flat)) * lattice.rank
    if big < 2**62:
        return coeffs.astype(np.int64) @ basis.astype(np.int64), den
    return coeffs.astype(object) @ basis, den


def _as_int_array(a: np.ndarray) -> np.ndarray:
    """int64 when safe, otherwise Python ints."""
    if a.dtype == object and len(a) and int(np.abs(a).max()) < 2**62:
        return a.astype(np.int64)
    return a


def _to_original(x: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Map reduced-basis coefficient rows to the original basis (``x @ U``)."""
    if len(x) == 0:
        return np.zeros((0, u.shape[1]), dtype=np.int64)
    umax = int(np.abs(u).max())
    if int(np.abs(x).max()) * umax * u.shape[0] < 2**62:
        return x.astype(np.int64) @ u.astype(np.int64)
    return _as_int_array(x.astype(object) @ u)


def _exact_norms(prep: _Prepared, x: np.ndarray, target: Sequence[Fraction]) -> tuple[np.ndarray, int]:
    """Numerators of ``q(x - target)`` over the common denominator returned."""
    cden = linalg.common_denominator(target)
    cnum = np.array([int(c * cden) for c in target], dtype=object)
    y = x.astype(object) * cden - cnum
    n = x.shape[1]
    gmax = int(np.abs(prep.gram_num).max())
    ymax = int(np.abs(y).max()) if len(y) else 0
    if n * n * gmax * ymax * ymax < 2**62:
        yi = y.astype(np.int64)
        q = np.einsum("ij,jk,ik->i", yi, prep.gram_num.astype(np.int64), yi)
    else:
        q = ((y @ prep.gram_num) * y).sum(axis=1)
    return q, prep.gram_den * cden * cden


def _top_range(prep: _Prepared, target: Sequence[float], upper: float) -> tuple[int, int]:
    n = len(prep.d)
    r = math.sqrt(max(upper, 0.0) * (1 + 1e-7) + 1e-7) / math.sqrt(prep.d[n - 1])
    return math.ceil(target[n - 1] - r), math.floor(target[n - 1] + r)


def _run_chunk(args):
    kernel, low, d, target, lower, upper, cap, lo, hi = args
    return KERNELS[kernel](low, d, target, lower, upper, cap, lo, hi)


def _query(lattice, target, radius_sq, mode, cap, jobs, kernel):
    """Coefficient rows (original basis) plus exact norms ``qnum / qden``."""
    prep = _prepare(lattice)
    radius_sq = Fraction(radius_sq)
    u = prep.transform
    t_red = _reduced_coords(prep, target)
    tf = np.array([float(x) for x in t_red])
    upper = float(radius_sq)
    lower = upper if mode is Mode.EXACT_SHELL else -1.0
    kernel = kernel or DEFAULT_KERNEL
    lo, hi = _top_range(prep, tf, upper)
    try:
        if jobs <= 1 or hi - lo < 1:
            cand = KERNELS[kernel](prep.low, prep.d, tf, lower, upper, cap, lo, hi)
        else:
            bounds = np.array_split(np.arange(lo, hi + 1), jobs)
            tasks = [(kernel, prep.low, prep.d, tf, lower, upper, cap, int(b[0]), int(b[-1])) for b in bounds if len(b)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_run_chunk, tasks))
            cand = np.concatenate(parts)
    except _kernel_py.CandidateLimit:
        raise EnumerationLimitError(f"more than {cap} candidates; is the radius mis-scaled?") from None
    if len(cand) > cap:
        raise EnumerationLimitError(f"more than {cap} candidates; is the radius mis-scaled?")
    if len(cand) == 0:
        return np.zeros((0, lattice.rank), dtype=np.int64), np.zeros(0, dtype=object), 1
    qnum, qden = _exact_norms(prep, cand, t_red)
    bound = radius_sq * qden
    if mode is Mode.EXACT_SHELL:
        keep = np.array([int(v) * bound.denominator == bound.numerator for v in qnum], dtype=bool)
    else:
        keep = np.array([int(v) * bound.denominator <= bound.numerator for v in qnum], dtype=bool)
    return _to_original(cand[keep], u), qnum[keep], qden


def lattice_points(
    lattice: ExactLattice,
    target: Sequence[object],
    radius_sq: object,
    mode: Mode = Mode.BALL,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    kernel: str | None = None,
) -> np.ndarray:
    """Integer coefficient rows (original basis) of the vectors matching the query."""
    return _query(lattice, target, radius_sq, Mode(mode), cap, jobs, kernel)[0]


def _sorted_set(lattice: ExactLattice, coeffs: np.ndarray, radius_sq: Fraction) -> VectorSet:
    if len(coeffs):
        num, _ = _ambient(lattice, coeffs)
        order = sorted(range(len(num)), key=lambda i: tuple(num[i].tolist()))
        coeffs = coeffs[order]
    return VectorSet(lattice, coeffs, Fraction(radius_sq))


def close_vectors(q: SphereQuery, cap: int = DEFAULT_CAP, jobs: int = 1, kernel: str | None = None) -> VectorSet:
    """All lattice vectors at squared distance ``radius_sq`` (or within it) of the target."""
    coeffs = lattice_points(q.lattice, q.target, q.radius_sq, q.mode, cap, jobs, kernel)
    return _sorted_set(q.lattice, coeffs, q.radius_sq)


def babai_bound(lattice: ExactLattice, target: Sequence[object]) -> Fraction:
    """Exact squared distance from ``target`` to its Babai nearest-plane point."""
    prep = _prepare(lattice)
    t_red = _reduced_coords(prep, target)
    n = len(t_red)
    low, d = prep.low_exact, prep.d_exact
    x = [0] * n
    total = Fraction(0)
    for i in range(n - 1, -1, -1):
        shift = sum((low[j][i] * (x[j] - t_red[j]) for j in range(i + 1, n)), Fraction(0))
        centre = t_red[i] - shift
        x[i] = round(centre)
        total += d[i] * (x[i] - centre) ** 2
    return total


def closest_vectors(lattice: ExactLattice, target: Sequence[object], jobs: int = 1) -> tuple[Fraction, VectorSet]:
    """Minimum squared distance from ``target`` to the lattice and all minimisers.

    Starts from a quarter of the Babai bound and doubles until a point shows up.
    """
    upper = babai_bound(lattice, target)
    radius = upper / 4
    while True:
        found, qnum, qden = _query(lattice, target, radius, Mode.BALL, DEFAULT_CAP, jobs, None)
        if len(found) or radius >= upper:
            break
        radius = min(upper, radius * 2)
    norms = [Fraction(int(v), qden) for v in qnum]
    best = min(norms)
    keep = np.array([x == best for x in norms], dtype=bool)
    return best, _sorted_set(lattice, found[keep], best)


def min_norm_in_coset(c: Coset, jobs: int = 1) -> tuple[Fraction, int]:
    """Minimum norm over ``shift + L`` and the number of vectors attaining it."""
    target = tuple(-x for x in c.shift)
    best, vs = closest_vectors(c.lattice, target, jobs)
    return best, len(vs)


def shortest_nonzero_norm(lattice: ExactLattice) -> Fraction:
    """Minimum norm of a nonzero vector (the LLL basis gives the search radius)."""
    prep = _prepare(lattice)
    upper = min(Fraction(int(v), prep.gram_den) for v in prep.gram_num.diagonal())
    pts, qnum, qden = _query(lattice, (0,) * lattice.ambient, upper, Mode.BALL, DEFAULT_CAP, 1, None)
    return min(Fraction(int(v), qden) for v, row in zip(qnum, pts) if row.any())
