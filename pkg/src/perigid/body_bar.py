"""Periodic body-bar frameworks.

The input is a multigraph of bodies whose edges are bars; loops must carry a
nonzero gain and equal-gain parallel edges are allowed.  Each body expands to
d+1 core joints plus one attachment joint per incident bar (two for a loop),
joined by a complete graph of identity-gain edges; each bar becomes a single
gain edge between attachment joints.  Rigidity of the result can be decided
either geometrically (rank of the rigidity matrix) or combinatorially via
the count matroid |F| <= C(d+1,2)|V(F)| - d - C(d-k(F),2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .framework import Lattice
from .gain_graph import (
    BAR_JOINT,
    BODY_BAR,
    GainEdge,
    GainGraph,
    gain_rank,
    require_valid,
)
from .rigidity import (
    GLOBALLY_RIGID,
    NOT_GLOBALLY_RIGID,
    GlobalVerdict,
    _sub_seed,
    is_rigid,
)

DEFAULT_EDGE_CAP = 20


@dataclass(frozen=True)
class BodyBarGainGraph:
    graph: GainGraph  # bar-joint mode
    bodies: dict[str, tuple[str, ...]]  # body vertex -> joint names
    bar_edges: dict[str, str]  # multigraph edge id -> bar edge id in graph


def _check_body_bar_input(multigraph: GainGraph) -> None:
    if multigraph.mode != BODY_BAR:
        raise ValueError("expected a body-bar mode gain graph")
    require_valid(multigraph)  # rejects identity-gain loops
    if not multigraph.vertices:
        raise ValueError("need at least one body")


def build_body_bar_gain_graph(multigraph: GainGraph, d: int) -> BodyBarGainGraph:
    """Expand a body-bar multigraph into its bar-joint gain graph."""
    _check_body_bar_input(multigraph)
    if d < 1:
        raise ValueError("d must be >= 1")
    k = multigraph.k
    zero = (0,) * k
    bodies: dict[str, tuple[str, ...]] = {}
    attachment: dict[tuple[str, str], str] = {}  # (edge id, end marker) -> joint
    for v in multigraph.vertices:
        joints = [f"{v}#c{i}" for i in range(1, d + 2)]
        for e in multigraph.edges:
            if e.is_loop() and e.tail == v:
                for marker in ("-", "+"):
                    name = f"{v}#a{e.id}{marker}"
                    attachment[(e.id, marker)] = name
                    joints.append(name)
            elif e.tail == v:
                name = f"{v}#a{e.id}"
                attachment[(e.id, "-")] = name
                joints.append(name)
            elif e.head == v:
                name = f"{v}#a{e.id}"
                attachment[(e.id, "+")] = name
                joints.append(name)
        bodies[v] = tuple(joints)

    edges: list[GainEdge] = []
    for v in multigraph.vertices:
        for a, b in combinations(bodies[v], 2):
            edges.append(GainEdge(f"B:{a}|{b}", a, b, zero))
    bar_edges: dict[str, str] = {}
    for e in multigraph.edges:
        bar_id = f"bar:{e.id}"
        edges.append(GainEdge(bar_id, attachment[(e.id, "-")], attachment[(e.id, "+")], e.gain))
        bar_edges[e.id] = bar_id

    vertices = tuple(j for v in multigraph.vertices for j in bodies[v])
    graph = require_valid(GainGraph(k, vertices, tuple(edges), BAR_JOINT))
    return BodyBarGainGraph(graph, bodies, bar_edges)


def is_bar_redundantly_rigid(
    multigraph: GainGraph,
    d: int,
    k: int | None = None,
    lattice: Lattice | None = None,
    trials: int = 3,
    seed: int = 0,
) -> tuple[bool, list[dict]]:
    """True iff removing any single bar (attachments retained) leaves a rigid
    body-bar gain graph.  Returns the verdict plus per-bar detail."""
    _check_body_bar_input(multigraph)
    if k is None:
        k = multigraph.k
    built = build_body_bar_gain_graph(multigraph, d)
    details = []
    all_rigid = True
    for i, e in enumerate(multigraph.edges):
        reduced = built.graph.delete_edge(built.bar_edges[e.id])
        verdict = is_rigid(reduced, d, k, lattice, trials, _sub_seed(seed, i))
        details.append({"edge": e.id, "rigid": verdict.rigid, "verdict": verdict.to_json()})
        if not verdict.rigid:
            all_rigid = False
    return all_rigid, details


def decide_body_bar_global(
    multigraph: GainGraph,
    d: int,
    k: int | None = None,
    lattice: Lattice | None = None,
    trials: int = 3,
    seed: int = 0,
) -> GlobalVerdict:
    """Global rigidity of a generic periodic body-bar realisation: bar
    redundancy, plus gain rank d when k = d.  Never returns Unknown."""
    _check_body_bar_input(multigraph)
    if k is None:
        k = multigraph.k
    redundant, details = is_bar_redundantly_rigid(multigraph, d, k, lattice, trials, seed)
    if not redundant:
        return GlobalVerdict(
            NOT_GLOBALLY_RIGID,
            "not-bar-redundantly-rigid",
            {"bar_deletions": details},
            trials,
            seed,
        )
    built = build_body_bar_gain_graph(multigraph, d)
    g_rank = gain_rank(built.graph)
    if k == d and g_rank != d:
        return GlobalVerdict(
            NOT_GLOBALLY_RIGID,
            "gain-rank-below-k",
            {"gain_rank": g_rank, "k": k, "bar_deletions": details},
            trials,
            seed,
        )
    return GlobalVerdict(
        GLOBALLY_RIGID,
        "bar-redundant-and-rank",
        {"gain_rank": g_rank, "bar_deletions": details},
        trials,
        seed,
    )


@dataclass(frozen=True)
class CountReport:
    rigid: bool
    target: int
    matroid_rank: int
    basis: tuple[str, ...] | None
    violating_subset: tuple[str, ...] | None

    def to_json(self) -> dict:
        return {
            "rigid": self.rigid,
            "target": self.target,
            "matroid_rank": self.matroid_rank,
            "basis": list(self.basis) if self.basis is not None else None,
            "violating_subset": (
                list(self.violating_subset) if self.violating_subset is not None else None
            ),
        }


class _CountMatroid:
    """Independence oracle for the bound |F| <= C(d+1,2)|V(F)| - d - C(d-k(F),2)."""

    def __init__(self, multigraph: GainGraph, d: int):
        self.graph = multigraph
        self.d = d
        self.edges = list(multigraph.edges)
        vidx = {v: i for i, v in enumerate(multigraph.vertices)}
        self.vertex_masks = [
            (1 << vidx[e.tail]) | (1 << vidx[e.head]) for e in self.edges
        ]
        self._bound: dict[int, int] = {}
        self._ok: dict[int, bool] = {0: True}

    def _edge_ids(self, mask: int) -> list[str]:
        return [e.id for i, e in enumerate(self.edges) if mask >> i & 1]

    def bound(self, mask: int) -> int:
        b = self._bound.get(mask)
        if b is None:
            vmask = 0
            for i, vm in enumerate(self.vertex_masks):
                if mask >> i & 1:
                    vmask |= vm
            kf = gain_rank(self.graph, self._edge_ids(mask))
            b = comb(self.d + 1, 2) * vmask.bit_count() - self.d - comb(self.d - kf, 2)
            self._bound[mask] = b
        return b

    def violates(self, mask: int) -> bool:
        return mask != 0 and mask.bit_count() > self.bound(mask)

    def independent(self, mask: int) -> bool:
        ok = self._ok.get(mask)
        if ok is None:
            if self.violates(mask):
                ok = False
            else:
                ok = True
                rest = mask
                while rest:
                    bit = rest & -rest
                    if not self.independent(mask ^ bit):
                        ok = False
                        break
                    rest ^= bit
            self._ok[mask] = ok
        return ok


def count_rank(
    multigraph: GainGraph,
    d: int,
    k: int | None = None,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> CountReport:
    """Combinatorial rigidity of a generic body-bar realisation via the count
    matroid on the bars.  Exact but exponential; refuses more than `edge_cap`
    edges."""
    _check_body_bar_input(multigraph)
    if k is None:
        k = multigraph.k
    if k != multigraph.k:
        raise ValueError("declared k does not match graph")
    m = len(multigraph.edges)
    if m > edge_cap:
        raise ValueError(f"{m} edges exceed the enumeration cap of {edge_cap}")
    target = comb(d + 1, 2) * len(multigraph.vertices) - d - comb(d - k, 2)
    matroid = _CountMatroid(multigraph, d)

    # exhaustive search; any independent set satisfies |F| <= b(F) <= target,
    # so the scan can stop as soon as the target size is reached
    rank = 0
    best_mask = 0
    for mask in range(1 << m):
        if mask.bit_count() > rank and matroid.independent(mask):
            rank = mask.bit_count()
            best_mask = mask
            if rank == target:
                break
    rigid = rank == target

    violating = None
    if not rigid:
        best = None
        for mask in range(1, 1 << m):
            if matroid.violates(mask):
                excess = mask.bit_count() - matroid.bound(mask)
                key = (-excess, mask.bit_count(), mask)
                if best is None or key < best[0]:
                    best = (key, mask)
        if best is not None:
            violating = tuple(matroid._edge_ids(best[1]))
    basis = tuple(matroid._edge_ids(best_mask)) if rigid else None
    return CountReport(rigid, target, rank, basis, violating)
