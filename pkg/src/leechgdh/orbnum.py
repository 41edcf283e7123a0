"""Cycle-shape arithmetic and the orbifold dimension bound.

Assumption: the weight-one space of the Leech lattice VOA is the 24-dim
Cartan subalgebra and inner automorphisms act trivially on it, so the fixed
dimension of ``g^d`` on it is the eigenvalue-1 multiplicity of ``nu^d``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import linalg


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class CycleShape:
    """Frame shape ``prod t^{b_t}`` with ``sum t * b_t = 24``."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        merged: dict[int, int] = {}
        for t, b in self.terms:
            if t < 1 or b < 0:
                raise ValueError(f"bad factor {t}^{b}")
            if b:
                merged[t] = merged.get(t, 0) + b
        object.__setattr__(self, "terms", tuple(sorted(merged.items())))
        if sum(t * b for t, b in self.terms) != 24:
            raise ValueError(f"cycle shape {self} has degree != 24")

    @classmethod
    def of(cls, mapping: dict[int, int]) -> "CycleShape":
        return cls(tuple(mapping.items()))

    @classmethod
    def parse(cls, text: str) -> "CycleShape":
        """Parse ``"1^2 2^2 3^2 6^2"``; a bare ``t`` means exponent one."""
        terms = []
        for tok in text.replace("{", "").replace("}", "").split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"cannot parse cycle shape factor {tok!r}")
            terms.append((int(m.group(1)), int(m.group(2) or 1)))
        if not terms:
            raise ValueError("empty cycle shape")
        return cls(tuple(terms))

    @classmethod
    def parse_tex(cls, text: str) -> "CycleShape":
        """TeX form such as ``1^82^8`` or ``2^{12}``: an unbraced exponent is one digit."""
        factor = r"(\d+)(?:\^(?:\{(\d+)\}|(\d)))?"
        compact = text.replace(" ", "")
        if not compact or not re.fullmatch(f"(?:{factor})+", compact):
            raise ValueError(f"cannot parse TeX cycle shape {text!r}")
        terms = [(int(t), int(braced or digit or 1)) for t, braced, digit in re.findall(factor, compact)]
        return cls(tuple(terms))

    def __str__(self) -> str:
        return " ".join(f"{t}" if b == 1 else f"{t}^{b}" for t, b in self.terms)

    @property
    def order(self) -> int:
        return lcm(*(t for t, _ in self.terms))

    @property
    def rank(self) -> int:
        return sum(b for _, b in self.terms)


def vacuum_anomaly(s: CycleShape) -> Fraction:
    """rho_nu = (1/24) sum_t b_t (t - 1/t)."""
    return sum((b * (t - Fraction(1, t)) for t, b in s.terms), Fraction(0)) / 24


def power_shape(s: CycleShape, d: int) -> CycleShape:
    out: dict[int, int] = {}
    for t, b in s.terms:
        g = gcd(t, d)
        out[t // g] = out.get(t // g, 0) + b * g
    return CycleShape.of(out)


def fixdim_power(s: CycleShape, d: int) -> int:
    """Multiplicity of the eigenvalue 1 of nu^d."""
    return sum(b * gcd(t, d) for t, b in s.terms)


@lru_cache(maxsize=None)
def eisenstein_coeffs(n: int) -> dict[int, Fraction]:
    """Solve sum_{d|n} c_n(d) gcd(t, d) = n/t for all t | n, exactly."""
    divs = divisors(n)
    mat = [[Fraction(gcd(t, d)) for t in divs] for d in divs]  # rows indexed by d
    rhs = [Fraction(n, t) for t in divs]
    if linalg.det(mat) == 0:
        raise AssertionError(f"gcd matrix for n={n} is singular")
    sol = linalg.solve_left(mat, rhs)
    assert sol is not None
    return dict(zip(divs, sol))


def residuals(n: int) -> dict[int, Fraction]:
    c = eisenstein_coeffs(n)
    return {t: sum((c[d] * gcd(t, d) for d in c), Fraction(0)) - Fraction(n, t) for t in divisors(n)}


def dim_bound(s: CycleShape, n: int) -> int:
    """24 + sum_{d|n} c_n(d) dim V_1^{g^d}; for n = 1 this is just 24."""
    if n % s.order:
        raise ValueError(f"order {s.order} of {s} does not divide {n}")
    if n == 1:
        return 24
    val = 24 + sum((c * fixdim_power(s, d) for d, c in eisenstein_coeffs(n).items()), Fraction(0))
    if val.denominator != 1:
        raise ValueError(f"non-integral dimension bound {val} for ({s}, {n})")
    return int(val)


def twisted_weight(rho_nu: Fraction, coset, jobs: int = 1) -> Fraction:
    """Conformal weight rho_nu + (min norm over the coset)/2."""
    from .enumeration import min_norm_in_coset

    m, _ = min_norm_in_coset(coset, jobs)
    return Fraction(rho_nu) + m / 2


@dataclass(frozen=True)
class ShapeClassInfo:
    shape: CycleShape
    lifted_order: int
    doubling: bool
    defect_is_one: bool | None = None

    def __post_init__(self) -> None:
        m = self.shape.order
        if self.lifted_order not in (m, 2 * m):
            raise ValueError(f"lifted order {self.lifted_order} impossible for {self.shape}")
        if self.doubling != (self.lifted_order == 2 * m):
            raise ValueError(f"doubling flag inconsistent for {self.shape}")
