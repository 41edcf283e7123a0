"""Hole diagrams: edges from difference norms, ADE recognition, Kac labels, centres.

Points sit on a sphere of squared radius ``2(1 - rho)`` around some centre.
A pair of points is joined by no edge, a single edge or a double edge when
half the norm of their difference is 2, 3 or 4 times ``1 - rho``.
"""
from __future__ import annotations

import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg

TILDE = "̃"
FAMILY_ORDER = "ADE"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Label:
    affine: bool
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, l = self.family, self.rank
        ok = (f == "A" and l >= 1) or (f == "D" and l >= 4) or (f == "E" and l in (6, 7, 8))
        if not ok:
            raise DiagramError(f"{f}_{l} is not a simply-laced label")

    @property
    def nodes(self) -> int:
        return self.rank + int(self.affine)

    def __str__(self) -> str:
        return f"{self.family}{TILDE if self.affine else ''}_{self.rank}"

    def ascii(self) -> str:
        return f"{self.family}~{self.rank}" if self.affine else f"{self.family}_{self.rank}"

    def tex(self) -> str:
        rank = str(self.rank) if self.rank < 10 else f"{{{self.rank}}}"
        return (f"\\tilde{{{self.family}}}" if self.affine else self.family) + f"_{rank}"


def _label_key(label: Label):
    return (label.affine, FAMILY_ORDER.index(label.family), label.rank)


@dataclass(frozen=True)
class Component:
    """One connected component as realised by concrete points."""

    label: Label
    indices: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HoleDiagram:
    components: tuple[tuple[Label, int], ...]
    parts: tuple[Component, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        counts: Counter = Counter()
        for label, mult in self.components:
            if mult < 1:
                raise DiagramError("multiplicities must be positive")
            counts[label] += mult
        object.__setattr__(self, "components", tuple(sorted(counts.items(), key=lambda x: _label_key(x[0]))))

    @classmethod
    def from_labels(cls, labels: Iterable, parts: Sequence[Component] = ()) -> "HoleDiagram":
        out = []
        for lab in labels:
            if not isinstance(lab, Label):
                family, rank, affine = lab
                lab = Label(bool(affine), family, int(rank))
            out.append((lab, 1))
        return cls(tuple(out), tuple(parts))

    def labels(self) -> list[Label]:
        return [lab for lab, m in self.components for _ in range(m)]

    @property
    def node_count(self) -> int:
        return sum(lab.nodes * m for lab, m in self.components)

    def is_empty(self) -> bool:
        return not self.components

    def _name(self, fmt) -> str:
        if not self.components:
            return "∅"
        return " ".join(fmt(lab) + (f"^{m}" if m > 1 else "") for lab, m in self.components)

    @property
    def canonical_name(self) -> str:
        return self._name(str)

    @property
    def ascii_name(self) -> str:
        if not self.components:
            return "empty"
        return self._name(Label.ascii)

    def __str__(self) -> str:
        return self.canonical_name

    def to_json(self) -> dict:
        return {
            "name": self.canonical_name,
            "components": [
                {"family": lab.family, "rank": lab.rank, "affine": lab.affine, "multiplicity": m}
                for lab, m in self.components
            ],
        }

    @classmethod
    def parse(cls, text: str) -> "HoleDiagram":
        """Read TeX (``A_1^2\\tilde{D}_8``), canonical (``A_1^2 D̃_8``) or ASCII (``A_1^2 D~8``)."""
        s = unicodedata.normalize("NFD", text).strip()
        if s in ("", "∅", "\\emptyset", "$\\emptyset$", "empty"):
            return cls(())
        s = s.strip("$")
        tok = re.compile(
            r"\s*(?:\\tilde\{(?P<tf>[ADE])\}_\{?(?P<tr>\d+)\}?"
            r"|(?P<uf>[ADE])" + TILDE + r"_\{?(?P<ur>\d+)\}?"
            r"|(?P<af>[ADE])~_?(?P<ar>\d+)"
            r"|(?P<pf>[ADE])_\{?(?P<pr>\d+)\}?)"
            r"(?:\^\{?(?P<m>\d+)\}?)?"
        )
        out: list[tuple[Label, int]] = []
        pos = 0
        while pos < len(s):
            m = tok.match(s, pos)
            if not m or m.end() == pos:
                raise DiagramError(f"cannot parse diagram {text!r} at {s[pos:]!r}")
            mult = int(m.group("m") or 1)
            for f, r, aff in (("tf", "tr", True), ("uf", "ur", True), ("af", "ar", True), ("pf", "pr", False)):
                if m.group(f):
                    out.append((Label(aff, m.group(f), int(m.group(r))), mult))
            pos = m.end()
            while pos < len(s) and s[pos].isspace():
                pos += 1
        return cls(tuple(out))


# --- geometry -> graph --------------------------------------------------------


@dataclass(frozen=True)
class WeightConfig:
    """Points (ambient vectors) on a common sphere, with inner-product scale."""

    points: tuple[tuple[Fraction, ...], ...]
    one_minus_rho: Fraction
    scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(tuple(Fraction(x) for x in p) for p in self.points))
        object.__setattr__(self, "one_minus_rho", Fraction(self.one_minus_rho))
        object.__setattr__(self, "scale", Fraction(self.scale))
        if not 0 < self.one_minus_rho <= 1:
            raise DiagramError("1 - rho must lie in (0, 1]")

    @classmethod
    def from_vector_set(cls, vs, one_minus_rho) -> "WeightConfig":
        return cls(vs.vectors, one_minus_rho, vs.lattice.scale)


def edge_multiplicities(w: WeightConfig) -> np.ndarray:
    """Matrix of edge multiplicities 0/1/2 from exact difference half-norms."""
    pts = w.points
    n = len(pts)
    den = linalg.common_denominator(x for p in pts for x in p) if pts else 1
    num = np.array([[int(x * den) for x in p] for p in pts], dtype=object)
    gram = num @ num.T if n else np.zeros((0, 0), dtype=object)
    unit = w.one_minus_rho
    mult = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(i + 1, n):
            d2 = gram[i, i] + gram[j, j] - 2 * gram[i, j]
            half = w.scale * Fraction(int(d2), den * den) / 2
            ratio = half / unit
            if ratio == 2:
                continue
            if ratio == 3:
                mult[i, j] = mult[j, i] = 1
            elif ratio == 4:
                mult[i, j] = mult[j, i] = 2
            else:
                raise DiagramError(
                    f"invalid configuration: difference half-norm {half} is {ratio} times 1-rho"
                )
    return mult


def _components(mult: np.ndarray) -> list[list[int]]:
    n = len(mult)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in np.nonzero(mult[v])[0]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(int(u))
        comps.append(sorted(comp))
    return comps


def _branch_lengths(adj: dict[int, list[int]], centre: int) -> list[int]:
    out = []
    for start in adj[centre]:
        prev, cur, length = centre, start, 1
        while len(adj[cur]) == 2:
            nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
            prev, cur, length = cur, nxt, length + 1
        if len(adj[cur]) > 2:
            return []  # another branch point on this arm
        out.append(length)
    return sorted(out)


def recognise(mult: np.ndarray) -> Label:
    """Label of a connected simply-laced (finite or affine) Dynkin graph."""
    v = len(mult)
    if v == 1:
        return Label(False, "A", 1)
    if (mult == 2).any():
        if v == 2:
            return Label(True, "A", 1)
        raise DiagramError("unrecognized component: double edge in a larger graph")
    if (mult > 2).any():
        raise DiagramError("unrecognized component")
    adj = {i: [int(j) for j in np.nonzero(mult[i])[0]] for i in range(v)}
    deg = sorted(len(a) for a in adj.values())
    edges = sum(deg) // 2
    label: Label | None = None
    if edges == v and deg[0] == deg[-1] == 2:
        label = Label(True, "A", v - 1)
    elif edges == v - 1:
        high = [i for i in adj if len(adj[i]) >= 3]
        if not high:
            label = Label(False, "A", v)
        elif len(high) == 1 and len(adj[high[0]]) == 4 and v == 5:
            label = Label(True, "D", 4)
        elif len(high) == 1 and len(adj[high[0]]) == 3:
            b = _branch_lengths(adj, high[0])
            table = {
                (1, 2, 2): Label(False, "E", 6), (1, 2, 3): Label(False, "E", 7),
                (1, 2, 4): Label(False, "E", 8), (2, 2, 2): Label(True, "E", 6),
                (1, 3, 3): Label(True, "E", 7), (1, 2, 5): Label(True, "E", 8),
            }
            if len(b) == 3 and b[0] == b[1] == 1:
                label = Label(False, "D", v)
            else:
                label = table.get(tuple(b))
        elif len(high) == 2 and all(len(adj[i]) == 3 for i in high):
            leaves = [sum(1 for u in adj[i] if len(adj[u]) == 1) for i in high]
            if leaves == [2, 2] and v >= 6:
                label = Label(True, "D", v - 1)
    if label is None:
        raise DiagramError(f"unrecognized component with degree sequence {deg}")
    # Independent check: finite types have positive-definite Cartan matrices,
    # affine types are singular.
    d = linalg.det(linalg.to_fraction_matrix(cartan_matrix(mult)))
    if (d == 0) != label.affine or d < 0:
        raise DiagramError(f"Cartan determinant {d} contradicts {label}")
    return label


def cartan_matrix(mult: np.ndarray) -> list[list[int]]:
    n = len(mult)
    return [[2 if i == j else -int(mult[i, j]) for j in range(n)] for i in range(n)]


def build_diagram(w: WeightConfig) -> HoleDiagram:
    mult = edge_multiplicities(w)
    parts = []
    for comp in _components(mult):
        sub = mult[np.ix_(comp, comp)]
        label = recognise(sub)
        parts.append(Component(label, tuple(comp), tuple(map(tuple, cartan_matrix(sub)))))
    return HoleDiagram.from_labels([p.label for p in parts], parts)


def kac_labels(component: Component | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Primitive positive null vector of an affine Cartan matrix."""
    cartan = component.cartan if isinstance(component, Component) else component
    ker = linalg.nullspace(linalg.to_fraction_matrix(cartan))
    if len(ker) != 1:
        raise DiagramError("not affine" if not ker else "Cartan kernel is not one-dimensional")
    a = linalg.primitive_integer_vector(ker[0])
    if a[0] < 0:
        a = [-x for x in a]
    if min(a) <= 0:
        raise DiagramError("null vector is not positive")
    return tuple(a)


def affine_centre(points: Sequence[Sequence[Fraction]], labels: Sequence[int],
                  radius_sq: Fraction | None = None, scale: Fraction = Fraction(1)) -> tuple[Fraction, ...]:
    """h = sum a_i beta_i / sum a_i, with the equidistance check."""
    total = sum(labels)
    dim = len(points[0])
    h = tuple(sum((Fraction(a) * Fraction(p[k]) for a, p in zip(labels, points)), Fraction(0)) / total for k in range(dim))
    dists = {scale * sum(((Fraction(x) - y) ** 2 for x, y in zip(p, h)), Fraction(0)) for p in points}
    if len(dists) != 1 or (radius_sq is not None and dists != {Fraction(radius_sq)}):
        raise AssertionError(f"points are not equidistant from the reconstructed centre: {sorted(dists)}")
    return h
