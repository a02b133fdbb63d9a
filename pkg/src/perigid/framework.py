"""Periodic frameworks on quotient gain graphs.

A framework is a bar-joint gain graph together with a lattice map
L: Z^k -> R^d (d x k rational matrix of full column rank) and a rational
placement of the quotient vertices.  The squared-length measurement of an
edge (u, v, gamma) is ||p(u) - p(v) - L(gamma)||^2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gain_graph import BAR_JOINT, GainGraph, GainVector, require_valid
from .linalg import RationalMatrix, integer_rank, rank

Point = tuple[Fraction, ...]
Placement = dict[str, Point]

SAMPLE_MAX = 2**30  # placement/lattice coordinates drawn from [1, SAMPLE_MAX]


@dataclass(frozen=True)
class Lattice:
    d: int
    k: int
    columns: tuple[Point, ...]  # k columns of length d

    def __post_init__(self):
        if not (0 <= self.k <= self.d):
            raise ValueError("need 0 <= k <= d")
        if len(self.columns) != self.k or any(len(c) != self.d for c in self.columns):
            raise ValueError("lattice needs k columns of length d")
        if rank(RationalMatrix.from_rows(self.columns, self.d)) != self.k:
            raise ValueError("lattice columns are not linearly independent")

    def image(self, gamma: GainVector) -> Point:
        """L(gamma) as a point of R^d."""
        if len(gamma) != self.k:
            raise ValueError("gain vector has wrong length")
        out = [Fraction(0)] * self.d
        for g, col in zip(gamma, self.columns):
            if g:
                for i in range(self.d):
                    out[i] += g * col[i]
        return tuple(out)


def identity_lattice(d: int, k: int) -> Lattice:
    cols = tuple(
        tuple(Fraction(1 if i == j else 0) for i in range(d)) for j in range(k)
    )
    return Lattice(d, k, cols)


@dataclass(frozen=True)
class Framework:
    graph: GainGraph
    lattice: Lattice
    placement: Placement  # treated as immutable

    def __post_init__(self):
        if self.graph.mode != BAR_JOINT:
            raise ValueError("frameworks are defined on bar-joint gain graphs")
        if self.graph.k != self.lattice.k:
            raise ValueError("graph and lattice periodicity ranks differ")
        check_placement(self.graph, self.lattice.d, self.placement)

    @property
    def d(self) -> int:
        return self.lattice.d


def check_placement(graph: GainGraph, d: int, placement: Placement) -> None:
    for v in graph.vertices:
        if v not in placement:
            raise ValueError(f"placement missing vertex {v!r}")
        if len(placement[v]) != d:
            raise ValueError(f"placement of {v!r} has wrong dimension")


def edge_measurements(framework: Framework) -> list[Fraction]:
    """Squared edge lengths of the quotient edges, in edge order."""
    return _measurements(framework, framework.placement)


def _measurements(framework: Framework, placement: Placement) -> list[Fraction]:
    out = []
    for e in framework.graph.edges:
        shift = framework.lattice.image(e.gain)
        diff = [
            placement[e.tail][i] - placement[e.head][i] - shift[i]
            for i in range(framework.d)
        ]
        out.append(sum(x * x for x in diff))
    return out


def rigidity_matrix(framework: Framework) -> RationalMatrix:
    """Jacobian of the squared-length map, one row per edge, d columns per
    vertex (the constant factor 2 is dropped; it never changes the rank)."""
    d = framework.d
    verts = framework.graph.vertices
    col_of = {v: i * d for i, v in enumerate(verts)}
    rows = []
    for e in framework.graph.edges:
        row = [Fraction(0)] * (d * len(verts))
        shift = framework.lattice.image(e.gain)
        for i in range(d):
            x = framework.placement[e.tail][i] - framework.placement[e.head][i] - shift[i]
            row[col_of[e.tail] + i] += x
            row[col_of[e.head] + i] -= x
        rows.append(row)
    return RationalMatrix(len(rows), d * len(verts), rows)


@dataclass(frozen=True)
class PinSpec:
    """Pinned vertices with per-vertex pinned coordinate counts.

    The first vertex is pinned in all d coordinates; each further vertex
    pins one coordinate fewer than the remaining rotational freedom, giving
    exactly d + C(d-k, 2) pinned coordinates in total.
    """

    vertices: tuple[str, ...]
    counts: tuple[int, ...]

    @classmethod
    def default(cls, graph: GainGraph, d: int, k: int) -> "PinSpec":
        t = max(d - k, 1)
        if len(graph.vertices) < t:
            raise ValueError(f"need at least {t} vertices to pin")
        counts = [d] + [d - k - j for j in range(1, t)]
        return cls(tuple(graph.vertices[:t]), tuple(counts))

    def total(self) -> int:
        return sum(self.counts)


def pinned_rigidity_matrix(framework: Framework, pins: PinSpec | None = None) -> RationalMatrix:
    """Rigidity matrix plus unit rows selecting the pinned coordinates."""
    d = framework.d
    k = framework.lattice.k
    if pins is None:
        pins = PinSpec.default(framework.graph, d, k)
    base = rigidity_matrix(framework)
    verts = framework.graph.vertices
    col_of = {v: i * d for i, v in enumerate(verts)}
    rows = [list(base.row(i)) for i in range(base.rows)]
    for v, count in zip(pins.vertices, pins.counts):
        for c in range(count):
            row = [Fraction(0)] * base.cols
            row[col_of[v] + c] = Fraction(1)
            rows.append(row)
    return RationalMatrix(len(rows), base.cols, rows)


def _random_point(rng: random.Random, d: int) -> Point:
    return tuple(Fraction(rng.randint(1, SAMPLE_MAX)) for _ in range(d))


def random_lattice(rng: random.Random, d: int, k: int) -> Lattice:
    while True:
        cols = tuple(_random_point(rng, d) for _ in range(k))
        ints = [[c[i].numerator for c in cols] for i in range(d)]
        if integer_rank(ints, k) == k:
            return Lattice(d, k, cols)


def random_generic_framework(
    graph: GainGraph,
    d: int,
    lattice: Lattice | None = None,
    seed: int = 0,
) -> Framework:
    """Seeded random framework; coordinates uniform integers in [1, 2^30]."""
    require_valid(graph)
    rng = random.Random(seed)
    if lattice is None:
        lattice = random_lattice(rng, d, graph.k)
    elif lattice.d != d or lattice.k != graph.k:
        raise ValueError("lattice dimensions do not match")
    placement = {v: _random_point(rng, d) for v in graph.vertices}
    return Framework(graph, lattice, placement)


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def generic_rank(
    graph: GainGraph,
    d: int,
    k: int | None = None,
    lattice: Lattice | None = None,
    trials: int = 3,
    seed: int = 0,
) -> int:
    """Rank of the rigidity matrix at the generic placement: the maximum of
    exact ranks over seeded random frameworks (Schwartz-Zippel style; wrong
    only with vanishing probability, and never over-reports)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if k is not None and k != graph.k:
        raise ValueError("declared k does not match graph")
    best = 0
    cap = min(len(graph.edges), d * len(graph.vertices))
    for t in range(trials):
        fw = random_generic_framework(graph, d, lattice, _trial_seed(seed, t))
        best = max(best, rank(rigidity_matrix(fw)))
        if best == cap:
            break
    return best


def are_equivalent(framework: Framework, q: Placement) -> bool:
    """Exact equality of all squared edge measurements for p and q."""
    check_placement(framework.graph, framework.d, q)
    return edge_measurements(framework) == _measurements(framework, q)


def are_congruent(framework: Framework, q: Placement) -> bool:
    """Exact congruence as L-periodic placements.

    Equality of measurements over the complete gain graph reduces to: equal
    squared distances on all vertex pairs, and equal inner products of all
    pair differences with each lattice column.
    """
    check_placement(framework.graph, framework.d, q)
    p = framework.placement
    d = framework.d
    verts = framework.graph.vertices
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            dp = [p[u][c] - p[v][c] for c in range(d)]
            dq = [q[u][c] - q[v][c] for c in range(d)]
            if sum(x * x for x in dp) != sum(x * x for x in dq):
                return False
            for col in framework.lattice.columns:
                if sum(x * y for x, y in zip(dp, col)) != sum(
                    x * y for x, y in zip(dq, col)
                ):
                    return False
    return True


def standard_target_rank(n_vertices: int, d: int, k: int) -> int:
    """Generic rank of a rigid quotient framework: d|V| - d - C(d-k, 2)."""
    return d * n_vertices - d - comb(d - k, 2)
