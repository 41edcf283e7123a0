"""Simple Lie types, affine structures and the lowest-order trace identity."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .diagram import HoleDiagram

FAMILIES = "ABCDEFG"
MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
LACING = {"A": 1, "D": 1, "E": 1, "B": 2, "C": 2, "F": 2, "G": 3}
MAX_RANK = 24


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, l = self.family, self.rank
        if f in MIN_RANK:
            ok = l >= MIN_RANK[f]
        else:
            ok = (f, l) in {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}
        if not ok:
            raise ValueError(f"no simple Lie algebra {f}_{l}")

    @property
    def dual_coxeter(self) -> int:
        f, l = self.family, self.rank
        return {
            "A": l + 1, "B": 2 * l - 1, "C": l + 1, "D": 2 * l - 2,
            "E": {6: 12, 7: 18, 8: 30}.get(l, 0), "F": 9, "G": 4,
        }[f]

    @property
    def lacing(self) -> int:
        return LACING[self.family]

    @property
    def dim(self) -> int:
        f, l = self.family, self.rank
        if f == "A":
            return l * (l + 2)
        if f in "BC":
            return l * (2 * l + 1)
        if f == "D":
            return l * (2 * l - 1)
        return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[(f, l)]

    def __str__(self) -> str:
        return f"{self.family}_{self.rank}"


def all_simple_types(max_rank: int = MAX_RANK) -> list[SimpleType]:
    out = []
    for f in "ABCD":
        out += [SimpleType(f, l) for l in range(MIN_RANK[f], max_rank + 1)]
    out += [SimpleType("E", l) for l in (6, 7, 8) if l <= max_rank]
    out += [SimpleType("F", 4), SimpleType("G", 2)]
    return out


Ideal = tuple[SimpleType, int]  # (type, level)


def _sort_key(ideal: Ideal):
    t, k = ideal
    return (FAMILIES.index(t.family), t.rank, k)


@dataclass(frozen=True)
class AffineStructure:
    """Multiset of simple ideals with levels, stored sorted."""

    ideals: tuple[Ideal, ...]

    def __post_init__(self) -> None:
        if not self.ideals:
            raise ValueError("an affine structure needs at least one ideal")
        ideals = tuple(sorted(((t, int(k)) for t, k in self.ideals), key=_sort_key))
        if any(k < 1 for _, k in ideals):
            raise ValueError("levels must be positive")
        object.__setattr__(self, "ideals", ideals)

    @property
    def ratio(self) -> Fraction:
        ratios = {Fraction(t.dual_coxeter, k) for t, k in self.ideals}
        if len(ratios) != 1:
            raise ValueError(f"ideals of {self} do not share h/k")
        return ratios.pop()

    @property
    def dim(self) -> int:
        return sum(t.dim for t, _ in self.ideals)

    @property
    def rank(self) -> int:
        return sum(t.rank for t, _ in self.ideals)

    def satisfies_trace_identity(self) -> bool:
        try:
            r = self.ratio
        except ValueError:
            return False
        return self.rank <= MAX_RANK and Fraction(self.dim) == 24 * (1 + r)

    def __str__(self) -> str:
        """Notation such as ``A_{3,1}^2 D_{5,2}^2``."""
        parts = []
        for (t, k), m in Counter(self.ideals).items():
            s = f"{t.family}_{{{t.rank},{k}}}"
            parts.append(s if m == 1 else f"{s}^{m}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "AffineStructure":
        """Parse ``A_{3,1}^2 D_{5,2}^2`` or the compact ``A_{3,1}^2D_{5,2}^2``."""
        pat = re.compile(r"([A-G])_\{(\d+),(\d+)\}(?:\^\{?(\d+)\}?)?")
        ideals: list[Ideal] = []
        pos = 0
        text = text.strip()
        for m in pat.finditer(text):
            if text[pos:m.start()].strip():
                raise ValueError(f"cannot parse affine structure {text!r}")
            t = SimpleType(m.group(1), int(m.group(2)))
            ideals += [(t, int(m.group(3)))] * int(m.group(4) or 1)
            pos = m.end()
        if text[pos:].strip() or not ideals:
            raise ValueError(f"cannot parse affine structure {text!r}")
        return cls(tuple(ideals))


def _ratios() -> list[Fraction]:
    """All r = h/k with 24 r integral; k must divide 24 h, so the set is finite."""
    out = set()
    for t in all_simple_types():
        h = t.dual_coxeter
        for k in range(1, 24 * h + 1):
            if (24 * h) % k == 0:
                out.add(Fraction(h, k))
    return sorted(out)


def _solutions_for_ratio(r: Fraction) -> list[AffineStructure]:
    total = 24 * (1 + r)
    if total.denominator != 1:
        return []
    total = int(total)
    ideals = []
    for t in all_simple_types():
        k = Fraction(t.dual_coxeter) / r
        if k.denominator == 1 and t.dim <= total:
            ideals.append((t, int(k)))
    ideals.sort(key=lambda x: (-x[0].dim, _sort_key(x)))
    out: list[AffineStructure] = []

    def rec(i: int, dim_left: int, rank_left: int, cur: list[Ideal]) -> None:
        if dim_left == 0:
            out.append(AffineStructure(tuple(cur)))
            return
        for j in range(i, len(ideals)):
            t = ideals[j][0]
            if t.dim <= dim_left and t.rank <= rank_left:
                cur.append(ideals[j])
                rec(j, dim_left - t.dim, rank_left - t.rank, cur)
                cur.pop()

    rec(0, total, MAX_RANK, [])
    return out


@lru_cache(maxsize=None)
def trace_identity_solutions() -> tuple[AffineStructure, ...]:
    """Semisimple V_1 of rank <= 24 with h_i/k_i = (dim V_1 - 24)/24 for all i."""
    sols: list[AffineStructure] = []
    for r in _ratios():
        sols += _solutions_for_ratio(r)
    for s in sols:
        if not s.satisfies_trace_identity():
            raise AssertionError(f"{s} fails the trace identity")
    if len(set(sols)) != len(sols):
        raise AssertionError("duplicate affine structures")
    return tuple(sols)


def orbifold_order(s: AffineStructure) -> int:
    return lcm(*(t.lacing * t.dual_coxeter for t, _ in s.ideals))


def level_lcm(s: AffineStructure) -> int:
    return lcm(*(t.lacing * k for t, k in s.ideals))


def _inverse_component(t: SimpleType) -> tuple[str, int, bool] | None:
    f, l = t.family, t.rank
    if f == "A":
        return ("A", l, True)
    if f == "B":
        return ("A", 1, False)
    if f == "C":
        return ("A", l - 1, False)
    if f == "D":
        return ("D", l, True)
    if f == "E":
        return ("E", l, True)
    if f == "F":
        return ("A", 2, False)
    return ("A", 1, False)  # G_2


def invtype_diagram(s: AffineStructure) -> HoleDiagram:
    """Diagram of the inverse orbifold automorphism, from the ideals attaining n."""
    n = orbifold_order(s)
    comps = [_inverse_component(t) for t, _ in s.ideals if t.lacing * t.dual_coxeter == n]
    return HoleDiagram.from_labels(comps)
