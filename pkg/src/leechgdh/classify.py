"""Candidate pairs, spurious elimination, the D12+ centre search and table checks."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import liealg, orbnum
from .diagram import HoleDiagram, Label, WeightConfig, affine_centre, build_diagram, kac_labels
from .enumeration import Mode, SphereQuery, close_vectors, closest_vectors, lattice_points
from .exactlat import ExactLattice, as_vector, d12plus_scaled, data_dir, dual_scale_half, in_d12plus, leech_lattice
from .liealg import AffineStructure
from .orbnum import CycleShape, ShapeClassInfo


class DataError(ValueError):
    """A bundled or user-supplied data file failed validation."""


class CentreError(RuntimeError):
    """A proposed centre does not give the expected hole."""


# --- data assets ---------------------------------------------------------------


def _load(name: str) -> dict:
    path = data_dir() / name
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from None


@lru_cache(maxsize=None)
def shape_catalog() -> tuple[ShapeClassInfo, ...]:
    rows = _load("co0_frame_shapes.json").get("rows", [])
    out = []
    try:
        for r in rows:
            doubling = r["doubling"]
            out.append(ShapeClassInfo(CycleShape.parse(r["shape"]), int(r["lifted_order"]), bool(doubling), r.get("defect_is_one")))
    except (KeyError, ValueError, TypeError) as exc:
        raise DataError(f"bad frame-shape record: {exc}") from None
    if len({i.shape for i in out}) != len(out):
        raise DataError("duplicate frame shapes in catalog")
    return tuple(out)


@dataclass(frozen=True)
class GoldenRow:
    no: int
    id: str
    structure: AffineStructure | None
    structure_tex: str
    dim: int
    n: int
    rho: tuple[Fraction, ...]
    diagram: HoleDiagram
    diagram_tex: str
    shape: CycleShape
    rank: int
    doubling: bool
    erratum: str | None = None  # corrected structure when the printed one is a typo


def parse_golden(obj: dict) -> tuple[GoldenRow, ...]:
    out = []
    try:
        for r in obj["rows"]:
            fixed = r.get("erratum", {}).get("structure_tex")
            out.append(GoldenRow(
                no=int(r["no"]), id=r["id"],
                structure=AffineStructure.parse(fixed or r["structure_tex"]) if r["structure"] else None,
                structure_tex=r["structure_tex"], dim=int(r["dim"]), n=int(r["n"]),
                rho=tuple(Fraction(x) for x in r["rho"]),
                diagram=HoleDiagram.parse(r["diagram_tex"]), diagram_tex=r["diagram_tex"],
                shape=CycleShape.parse(r["shape"]), rank=int(r["rank"]), doubling=bool(r["doubling"]),
                erratum=fixed,
            ))
    except (KeyError, ValueError, TypeError, AttributeError) as exc:
        raise DataError(f"bad table row: {exc!r}") from None
    return tuple(out)


def read_golden(path) -> tuple[GoldenRow, ...]:
    """Golden rows from a user-supplied JSON file in the bundled format."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    if not isinstance(obj, dict):
        raise DataError(f"{path}: expected an object with a 'rows' list")
    return parse_golden(obj)


@lru_cache(maxsize=None)
def golden_rows() -> tuple[GoldenRow, ...]:
    return parse_golden(_load("golden_holes.json"))


@dataclass(frozen=True)
class SpuriousRow:
    shape: CycleShape
    lifted_order: int
    rho: Fraction
    n: int
    structure: AffineStructure
    diagram: HoleDiagram
    norms: str


@lru_cache(maxsize=None)
def spurious_rows() -> tuple[SpuriousRow, ...]:
    out = []
    try:
        for r in _load("spurious_pairs.json")["rows"]:
            out.append(SpuriousRow(
                CycleShape.parse(r["shape"]), int(r["lifted_order"]), Fraction(r["rho"]), int(r["n"]),
                AffineStructure.parse(r["structure_tex"]), HoleDiagram.parse(r["diagram_tex"]), r["norms"],
            ))
    except (KeyError, ValueError, TypeError) as exc:
        raise DataError(f"bad spurious row: {exc}") from None
    return tuple(out)


def seed_check() -> list[str]:
    """Re-validate the bundled data; returns a list of problems (empty if clean)."""
    from .golay import m24_class_representatives, permutation_doubles

    problems = []
    lat = leech_lattice()  # asserts det 1, even, min norm 4
    if lat.rank != 24:
        problems.append("Leech basis has wrong rank")
    reps = m24_class_representatives()
    for info in shape_catalog():
        key = str(info.shape)
        if key in reps and permutation_doubles(reps[key]) != info.doubling:
            problems.append(f"doubling flag of {key} disagrees with an explicit permutation")
    cat = {i.shape: i for i in shape_catalog()}
    for row in spurious_rows():
        info = cat.get(row.shape)
        if info is None or info.lifted_order != row.lifted_order:
            problems.append(f"lifted order of {row.shape} disagrees with the spurious table")
        if orbnum.vacuum_anomaly(row.shape) != row.rho:
            problems.append(f"vacuum anomaly of {row.shape} disagrees with the spurious table")
    for row in golden_rows():
        info = cat.get(row.shape)
        if info is None or info.doubling != row.doubling:
            problems.append(f"doubling of {row.shape} disagrees with the table heading")
        if len(row.rho) != len(orbnum.divisors(row.n)):
            problems.append(f"row {row.id}: weight list length differs from the divisor count of n")
    if len(golden_rows()) != 70 or len(spurious_rows()) != 13:
        problems.append("golden tables have the wrong number of rows")
    return problems


# --- candidate pairs -----------------------------------------------------------


@dataclass(frozen=True)
class CandidatePair:
    structure: AffineStructure
    shape: CycleShape
    n: int
    expected_diagram: HoleDiagram
    info: ShapeClassInfo = field(compare=False)

    @property
    def rho(self) -> Fraction:
        return orbnum.vacuum_anomaly(self.shape)


def candidate_pairs(catalog: Sequence[ShapeClassInfo] | None = None) -> list[CandidatePair]:
    """Pairs meeting the trace identity, the rank condition, |nu| | n and 1/(1-rho) = lcm(l k)."""
    catalog = shape_catalog() if catalog is None else catalog
    out = []
    for s in liealg.trace_identity_solutions():
        n = liealg.orbifold_order(s)
        lk = liealg.level_lcm(s)
        for info in catalog:
            sh = info.shape
            rho = orbnum.vacuum_anomaly(sh)
            if sh.rank != s.rank or n % sh.order or rho >= 1:
                continue
            if 1 / (1 - rho) == lk:
                out.append(CandidatePair(s, sh, n, liealg.invtype_diagram(s), info))
    return out


def _required_multiples(d: HoleDiagram) -> list[int]:
    """Which of 2, 3, 4 times (1 - rho) occur as difference half-norms in the diagram."""
    labels = d.labels()
    ks = set()
    if len(labels) > 1 or any(lab.nodes >= 3 and not (lab.affine and lab.family == "A" and lab.rank == 2) for lab in labels):
        ks.add(2)
    if any(lab.nodes >= 2 and not (lab.affine and lab.family == "A" and lab.rank == 1) for lab in labels):
        ks.add(3)
    if any(lab.affine and lab.family == "A" and lab.rank == 1 for lab in labels):
        ks.add(4)
    return sorted(ks)


def format_norm(half_norm: Fraction) -> str:
    """Write a half-norm x as the full norm "2a/b" where a/b = x in lowest terms."""
    return f"{2 * half_norm.numerator}/{half_norm.denominator}"


@dataclass(frozen=True)
class SpuriousVerdict:
    keep: bool
    half_norms: tuple[Fraction, ...]
    witness: tuple[Fraction, ...]

    @property
    def norms_string(self) -> str:
        return ", ".join(format_norm(x) for x in self.half_norms)


def spurious_norm_filter(p: CandidatePair, info: ShapeClassInfo | None = None) -> SpuriousVerdict:
    """Eliminate p when a required difference half-norm is not in (1/|phi|) Z."""
    info = p.info if info is None else info
    unit = 1 - p.rho
    halves = tuple(k * unit for k in _required_multiples(p.expected_diagram))
    bad = tuple(x for x in halves if (x * info.lifted_order).denominator != 1)
    return SpuriousVerdict(not bad, halves, bad)


# --- centres -------------------------------------------------------------------


@dataclass(frozen=True)
class CentreCheck:
    centre: tuple[Fraction, ...]
    diagram: HoleDiagram
    min_half_norm: Fraction
    twisted_weight: Fraction
    points: int


def verify_centre(lattice: ExactLattice, centre: Sequence[object], rho_nu: object,
                  expected: HoleDiagram | None = None, jobs: int = 1) -> CentreCheck:
    """Closest points to ``centre`` must sit at radius^2 2(1 - rho) and form ``expected``."""
    rho = Fraction(rho_nu)
    radius = 2 * (1 - rho)
    centre = as_vector(centre)
    vs = close_vectors(SphereQuery(lattice, centre, radius, Mode.BALL), jobs=jobs)
    if len(vs) == 0:
        raise CentreError("no lattice vector at the hole radius")
    num, den = vs.scaled_vectors
    dists = set()
    for row in num:
        diff = [Fraction(int(a), den) - c for a, c in zip(row, centre)]
        dists.add(lattice.scale * sum((x * x for x in diff), Fraction(0)))
    if min(dists) < radius:
        raise CentreError(f"closer vector exists (squared distance {min(dists)} < {radius})")
    diagram = build_diagram(WeightConfig.from_vector_set(vs, 1 - rho))
    if expected is not None and diagram != expected:
        raise CentreError(f"diagram mismatch: found {diagram}, expected {expected}")
    return CentreCheck(centre, diagram, radius / 2, rho + radius / 2, len(vs))


# --- the D12+ search ------------------------------------------------------------

D12_TARGETS = {
    HoleDiagram.parse(k).canonical_name: v
    for k, v in {"A_1": 46, "A_1^2": 22, "A_1^3": 14, "A_1^4": 10, "A_1^6": 6, "A~1^12": 2}.items()
}
D12_RHO = Fraction(3, 4)
# phi(nu)^2 = sigma_t with <t, x> = <x, x> mod 1 on K/2; in D12 coordinates t = e_1 mod K.
D12_LIFT_SQUARE = (Fraction(1),) + (Fraction(0),) * 11


@dataclass(frozen=True)
class D12SearchResult:
    target: HoleDiagram
    n: int
    sign_perm_classes: int
    orbit_candidates: int
    surviving_orbits: tuple[tuple[int, ...], ...]
    checks: tuple[CentreCheck, ...]


def sign_perm_classes(n: int, strict: bool = True) -> list[tuple[int, ...]]:
    """Nondecreasing nonnegative (h_1..h_12), all even or all odd, sum h_i^2 = n^2,
    and h_i + h_j < n (or <= n when ``strict`` is False) for i != j."""
    out: list[tuple[int, ...]] = []
    target = n * n

    def rec(parity: int, maxv: int, remaining: int, slots: int, cur: list[int]) -> None:
        if slots == 0:
            if remaining == 0:
                s = cur[::-1]
                top = s[-1] + s[-2]
                if top < n or (not strict and top == n):
                    out.append(tuple(s))
            return
        v = maxv
        while v >= 0:
            if v % 2 == parity and v * v <= remaining and remaining - v * v <= (slots - 1) * v * v:
                cur.append(v)
                rec(parity, v, remaining - v * v, slots - 1, cur)
                cur.pop()
            v -= 1

    for p in (0, 1):
        rec(p, n, target, 12, [])
    return sorted(out)


def ok_orbit_representatives(cls: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Split a class under all sign changes into O(K) orbits (even sign changes)."""
    if 0 in cls:
        return [cls]
    return [cls, (-cls[0],) + cls[1:]]


@lru_cache(maxsize=None)
def _half_k() -> ExactLattice:
    return dual_scale_half(d12plus_scaled())


def d12_centre(h: Sequence[int], n: int) -> tuple[Fraction, ...]:
    """h = sqrt(2)(h_i)/(2n), in the D12+ coordinates of K/2."""
    return tuple(Fraction(x, 2 * n) for x in h)


def _odd_power_point(h: Sequence[int], n: int, m: int) -> tuple[Fraction, ...]:
    """Shift of g^m = phi(nu)^m sigma_{mh} for odd m: phi(nu)^2 = sigma_t, so m = 3 mod 4 adds t."""
    centre = d12_centre(h, n)
    shift = D12_LIFT_SQUARE if m % 4 == 3 else (0,) * 12
    return tuple(m * x + s for x, s in zip(centre, shift))


def _condition_four(args) -> tuple[tuple[int, ...], bool]:
    """Odd powers: radius exactly attained for m = 1 mod 4, never undercut for m = 3 mod 4."""
    h, n, target_name = args
    lat = _half_k()
    radius = 2 * (1 - D12_RHO)
    for j in range(1, n, 2):
        pt = _odd_power_point(h, n, j)
        found = lattice_points(lat, pt, radius, Mode.BALL)
        if len(found) == 0:
            if j % 4 == 1:
                return h, False
            continue
        best = min(_sq_dist(lat, lat.vector([int(c) for c in row]), pt) for row in found)
        if best != radius if j % 4 == 1 else best < radius:
            return h, False
        if j == 1:
            vs = close_vectors(SphereQuery(lat, pt, radius, Mode.EXACT_SHELL))
            try:
                d = build_diagram(WeightConfig.from_vector_set(vs, 1 - D12_RHO))
            except ValueError:
                return h, False
            if d != HoleDiagram.parse(target_name):
                return h, False
    return h, True


def _sq_dist(lat: ExactLattice, v, c) -> Fraction:
    return lat.scale * sum(((a - b) ** 2 for a, b in zip(v, c)), Fraction(0))


def d12_centre_search(target: HoleDiagram | str, n: int | None = None, jobs: int = 1) -> D12SearchResult:
    target = HoleDiagram.parse(target) if isinstance(target, str) else target
    name = target.canonical_name
    if name not in D12_TARGETS:
        raise ValueError(f"no D12+ search for diagram {name}")
    n = D12_TARGETS[name] if n is None else n
    strict = name == "A_1"
    classes = sign_perm_classes(n, strict=strict)
    orbits = [o for c in classes for o in ok_orbit_representatives(c)]
    tasks = [(o, n, name) for o in orbits]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_condition_four, tasks, chunksize=64))
    else:
        results = [_condition_four(t) for t in tasks]
    survivors = tuple(sorted(h for h, ok in results if ok))
    checks = tuple(verify_centre(_half_k(), d12_centre(h, n), D12_RHO, target) for h in survivors)
    return D12SearchResult(target, n, len(classes), len(orbits), survivors, checks)


def d12_twisted_weights(h: Sequence[int], n: int) -> dict[int, Fraction]:
    """Weights of V(g^m) for odd m | n; even m would need the full Leech gluing."""
    lat = _half_k()
    out = {}
    for m in orbnum.divisors(n):
        if m % 2:
            best, _ = closest_vectors(lat, _odd_power_point(h, n, m))
            out[m] = D12_RHO + best / 2
    return out


def order_consistent(h: Sequence[int], n: int) -> bool:
    """2n h lies in K, i.e. (h_i) in D12+."""
    return in_d12plus([Fraction(x) for x in h])


# --- affine completions in the Leech lattice ------------------------------------

SEEDS = {str(lab): lab for lab in (Label(True, "A", 1), Label(True, "A", 2), Label(True, "A", 3))}


def _seed_norms(label: Label) -> list[list[int]]:
    """Required squared distances between seed nodes (rho = 0): 4, 6 or 8."""
    v = label.nodes
    if v == 2:
        return [[0, 8], [8, 0]]
    d = [[0] * v for _ in range(v)]
    for i in range(v):
        for j in range(v):
            if i != j:
                d[i][j] = 6 if (j - i) % v in (1, v - 1) else 4
    return d


def _norm4_shell(lat: ExactLattice) -> np.ndarray:
    return lattice_points(lat, (0,) * lat.ambient, 4, Mode.EXACT_SHELL)


def embed_seed(lat: ExactLattice, label: Label) -> list[tuple[Fraction, ...]]:
    """Lattice points realising the affine seed with node 0 at the origin."""
    req = _seed_norms(label)
    v = label.nodes
    shell = _norm4_shell(lat)
    gram = np.array([[int(x) for x in row] for row in lat.gram], dtype=np.int64)
    # Node 1 = u - w for norm-4 u, w; squared length 8 - 2<u, w>.
    u = shell[0]
    ips = shell @ gram @ u
    want_ip = (8 - req[0][1]) // 2
    idx = int(np.nonzero(ips == want_ip)[0][0])
    first = lat.vector([int(x) for x in (u - shell[idx])])
    placed = [as_vector((0,) * lat.ambient), first]

    def rec() -> bool:
        i = len(placed)
        if i == v:
            return True
        # Query around the midpoint of node 0 and the last placed node.
        a, b = 0, i - 1
        pa, pb = placed[a], placed[b]
        mid = tuple((x + y) / 2 for x, y in zip(pa, pb))
        ab = _sq_dist(lat, pa, pb)
        radius = Fraction(req[a][i] + req[b][i], 2) - ab / 4
        if radius < 0:
            return False
        vs = close_vectors(SphereQuery(lat, mid, radius, Mode.EXACT_SHELL))
        for cand in vs.vectors:
            if all(_sq_dist(lat, cand, placed[j]) == req[j][i] for j in range(i)):
                placed.append(cand)
                if rec():
                    return True
                placed.pop()
        return False

    if not rec():
        raise CentreError("no embedding found")
    return placed


def affine_completion_search(seed: str, lattice: ExactLattice | None = None, rho_nu: object = 0) -> list[tuple[tuple[Fraction, ...], HoleDiagram]]:
    """Embed the seed, rebuild its centre from Kac labels and read off the full hole."""
    seed = HoleDiagram.parse(seed).canonical_name
    if seed not in SEEDS:
        raise ValueError(f"seed must be one of {sorted(SEEDS)}")
    lat = leech_lattice() if lattice is None else lattice
    if Fraction(rho_nu) != 0:
        raise ValueError("completions are only implemented for the identity shape")
    label = SEEDS[seed]
    pts = embed_seed(lat, label)
    seed_diagram = build_diagram(WeightConfig(tuple(pts), 1, lat.scale))
    if seed_diagram != HoleDiagram.from_labels([label]):
        raise AssertionError(f"embedded seed has diagram {seed_diagram}")
    labels = kac_labels(seed_diagram.parts[0])
    order = seed_diagram.parts[0].indices
    centre = affine_centre([pts[i] for i in order], labels, Fraction(2), lat.scale)
    check = verify_centre(lat, centre, 0)
    return [(centre, check.diagram)]


def centres_to_json(found: Iterable[tuple[Sequence[Fraction], HoleDiagram]], lattice: ExactLattice | None = None) -> dict:
    """Serialise centres in lattice-basis coordinates, the format read by deep_hole_centres."""
    lat = leech_lattice() if lattice is None else lattice
    rows = []
    for centre, diagram in found:
        coeffs = lat.coordinates(centre)
        rows.append({"diagram": diagram.ascii_name,
                     "basis_coordinates": [[c.numerator, c.denominator] for c in coeffs]})
    return {"lattice": lat.name, "centres": rows}


@lru_cache(maxsize=None)
def deep_hole_centres() -> dict[str, tuple[Fraction, ...]]:
    """Optional bundled 1^24 centres, keyed by diagram, in ambient coordinates."""
    path = data_dir() / "deep_hole_centres.json"
    if not path.exists():
        return {}
    lat = leech_lattice()
    out = {}
    for r in _load("deep_hole_centres.json")["centres"]:
        coeffs = [Fraction(p[0], p[1]) for p in r["basis_coordinates"]]
        out[HoleDiagram.parse(r["diagram"]).canonical_name] = lat.vector(coeffs)
    return out


def leech_twisted_weights(centre: Sequence[Fraction], n: int) -> dict[int, Fraction]:
    lat = leech_lattice()
    out = {}
    for m in orbnum.divisors(n):
        best, _ = closest_vectors(lat, tuple(m * x for x in centre))
        out[m] = best / 2
    return out


# --- tables ---------------------------------------------------------------------


@dataclass
class RowReport:
    id: str
    no: int
    structure: str
    shape: str
    rank: int
    n: int
    dim: int
    diagram: str
    weights: dict[int, str]
    verified_diagram: str | None
    diffs: list[str]

    def to_json(self) -> dict:
        return {
            "id": self.id, "no": self.no, "structure": self.structure, "shape": self.shape,
            "rank": self.rank, "n": self.n, "dim": self.dim, "diagram": self.diagram,
            "computed_weights": {str(k): v for k, v in sorted(self.weights.items())},
            "verified_diagram": self.verified_diagram, "diffs": self.diffs,
        }


# Published representatives (h_1..h_12) of the 2^12 centres, up to signed permutation.
D12_REPRESENTATIVES = {
    HoleDiagram.parse(k).canonical_name: v
    for k, v in {
        "A_1": (0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 24),
        "A_1^2": (0, 0, 2, 2, 4, 4, 6, 6, 8, 8, 10, 12),
        "A_1^3": (0, 0, 0, 2, 2, 2, 4, 4, 4, 6, 6, 8),
        "A_1^4": (0, 0, 0, 0, 2, 2, 2, 2, 4, 4, 4, 6),
        "A_1^6": (0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 4),
        "A~1^12": (0,) * 11 + (2,),
    }.items()
}


def reproduce_tables(geometry: bool = True, d12_centres: dict[str, tuple[int, ...]] | None = None,
                     golden: Iterable[GoldenRow] | None = None) -> list[RowReport]:
    """Recompute every row of the classification table and diff it against the golden copy.

    ``d12_centres`` maps 2^12 diagram names to (h_1..h_12); by default the
    published representatives are used (the search itself re-derives them).
    """
    golden = golden_rows() if golden is None else tuple(golden)
    d12 = D12_REPRESENTATIVES if d12_centres is None else d12_centres
    pairs = {(p.structure, p.shape): p for p in candidate_pairs()}
    leech_centres = deep_hole_centres() if geometry else {}
    reports = []
    for row in golden:
        diffs: list[str] = []
        if row.structure is None:
            n, dim, diagram = 1, orbnum.dim_bound(row.shape, 1), HoleDiagram(())
            struct = "C^24"
        else:
            s = row.structure
            n = liealg.orbifold_order(s)
            dim = orbnum.dim_bound(row.shape, n)
            diagram = liealg.invtype_diagram(s)
            struct = str(s)
            if (s, row.shape) not in pairs:
                diffs.append("not a candidate pair")
            if s.dim != row.dim:
                diffs.append(f"dim V_1 {s.dim} != {row.dim}")
        rank = orbnum.fixdim_power(row.shape, 1)
        if n != row.n:
            diffs.append(f"n {n} != {row.n}")
        if dim != row.dim:
            diffs.append(f"Dim {dim} != {row.dim}")
        if diagram != row.diagram:
            diffs.append(f"diagram {diagram} != {row.diagram}")
        if rank != row.rank:
            diffs.append(f"rank {rank} != {row.rank}")
        if len(row.rho) != len(orbnum.divisors(row.n)):
            diffs.append("weight list length")
        weights: dict[int, Fraction] = {}
        verified = None
        if geometry:
            name = row.diagram.canonical_name
            if str(row.shape) == "2^12" and name in d12:
                check = verify_centre(_half_k(), d12_centre(d12[name], n), D12_RHO, row.diagram)
                verified = check.diagram.canonical_name
                weights = d12_twisted_weights(d12[name], n)
            elif str(row.shape) == "1^24" and name in leech_centres:
                check = verify_centre(leech_lattice(), leech_centres[name], 0, row.diagram)
                verified = check.diagram.canonical_name
                weights = leech_twisted_weights(leech_centres[name], n)
        divs = orbnum.divisors(row.n)
        for m, w in weights.items():
            gold = row.rho[divs.index(m)]
            if w != gold:
                diffs.append(f"weight at m={m}: {w} != {gold}")
        reports.append(RowReport(row.id, row.no, struct, str(row.shape), rank, n, dim,
                                 diagram.canonical_name, {m: str(w) for m, w in weights.items()}, verified, diffs))
    return reports


def partition_candidates() -> tuple[list[CandidatePair], list[CandidatePair], list[CandidatePair]]:
    """Split candidate pairs into (table-2 rows, spurious rows, unmatched)."""
    genuine = {(r.structure, r.shape) for r in golden_rows() if r.structure is not None}
    spurious = {(r.structure, r.shape) for r in spurious_rows()}
    a, b, c = [], [], []
    for p in candidate_pairs():
        key = (p.structure, p.shape)
        (a if key in genuine else b if key in spurious else c).append(p)
    return a, b, c
