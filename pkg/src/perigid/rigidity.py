"""Rigidity, vertex-redundant rigidity and the global-rigidity decision.

A quotient framework with |V| >= d+1 (or with full periodicity k = d) is
generically rigid iff the rigidity matrix has rank d|V| - d - C(d-k, 2).
Below that vertex count the standard count does not apply; rigidity is then
decided by comparing the generic rank against the generic rank of the
saturated complete gain graph on the same vertex set, enlarging the gain
window until the rank stabilises.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .framework import Lattice, generic_rank, standard_target_rank
from .gain_graph import (
    BAR_JOINT,
    GainEdge,
    GainGraph,
    gain_rank,
    require_valid,
)

STANDARD_COUNT = "standard-count"
SATURATED_COMPARISON = "saturated-complete-comparison"

GLOBALLY_RIGID = "GloballyRigid"
NOT_GLOBALLY_RIGID = "NotGloballyRigid"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RigidityVerdict:
    rigid: bool
    achieved_rank: int
    target_rank: int
    method: str
    trials: int
    seed: int

    def to_json(self) -> dict:
        return {
            "rigid": self.rigid,
            "achieved_rank": self.achieved_rank,
            "target_rank": self.target_rank,
            "method": self.method,
            "trials": self.trials,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class GlobalVerdict:
    status: str
    reason: str
    detail: dict
    trials: int
    seed: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "reason": self.reason,
            "detail": self.detail,
            "trials": self.trials,
            "seed": self.seed,
        }


def saturated_complete_graph(vertices, k: int, window: int) -> GainGraph:
    """All edges u -> v (u < v) with every gain in {-window..window}^k.

    Loops are omitted: a loop contributes no length constraint under a fixed
    lattice, so it never changes a rank.
    """
    verts = tuple(sorted(vertices))
    edges = []
    idx = 0
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            for g in product(range(-window, window + 1), repeat=k):
                edges.append(GainEdge(f"s{idx}", u, v, tuple(g)))
                idx += 1
    return GainGraph(k, verts, tuple(edges), BAR_JOINT)


def saturated_complete_rank(
    vertices,
    d: int,
    k: int,
    lattice: Lattice | None,
    trials: int,
    seed: int,
    max_window: int = 8,
) -> int:
    """Generic rank of the complete gain graph on `vertices`, approximated by
    growing the finite gain window until two consecutive radii agree."""
    prev = None
    for m in range(1, max_window + 1):
        sat = saturated_complete_graph(vertices, k, m)
        r = generic_rank(sat, d, k, lattice, trials, seed)
        if prev is not None and r == prev:
            return r
        prev = r
    raise RuntimeError("saturated complete rank did not stabilise")


def is_rigid(
    graph: GainGraph,
    d: int,
    k: int | None = None,
    lattice: Lattice | None = None,
    trials: int = 3,
    seed: int = 0,
) -> RigidityVerdict:
    require_valid(graph)
    if graph.mode != BAR_JOINT:
        raise ValueError("rigidity verdicts are defined for bar-joint graphs")
    if k is None:
        k = graph.k
    if k != graph.k:
        raise ValueError("declared k does not match graph")
    if not (0 <= k <= d):
        raise ValueError("need 0 <= k <= d")
    n = len(graph.vertices)
    achieved = generic_rank(graph, d, k, lattice, trials, seed)
    if n >= d + 1 or k == d:
        target = standard_target_rank(n, d, k)
        method = STANDARD_COUNT
    else:
        target = saturated_complete_rank(graph.vertices, d, k, lattice, trials, seed)
        method = SATURATED_COMPARISON
    return RigidityVerdict(achieved == target, achieved, target, method, trials, seed)


def is_vertex_redundantly_rigid(
    graph: GainGraph,
    d: int,
    k: int | None = None,
    lattice: Lattice | None = None,
    trials: int = 3,
    seed: int = 0,
) -> tuple[bool, list[dict]]:
    """True iff deleting any single vertex (orbit) leaves a rigid graph.

    Deleting down to the empty vertex set counts as rigid.  Returns the
    verdict and a per-vertex detail list.
    """
    require_valid(graph)
    if k is None:
        k = graph.k
    details = []
    all_rigid = True
    for i, v in enumerate(graph.vertices):
        reduced = graph.delete_vertex(v)
        if not reduced.vertices:
            details.append({"vertex": v, "rigid": True, "note": "empty graph, vacuously rigid"})
            continue
        verdict = is_rigid(reduced, d, k, lattice, trials, _sub_seed(seed, i))
        details.append({"vertex": v, "rigid": verdict.rigid, "verdict": verdict.to_json()})
        if not verdict.rigid:
            all_rigid = False
    return all_rigid, details


def _sub_seed(seed: int, index: int) -> int:
    # stable per-subtask seeds so parallel evaluation stays deterministic
    return seed * 7_368_787 + index + 1


def decide_global_rigidity(
    graph: GainGraph,
    d: int,
    k: int | None = None,
    lattice: Lattice | None = None,
    trials: int = 3,
    seed: int = 0,
) -> GlobalVerdict:
    """Three-way global rigidity decision.

    Cascade: not rigid -> NotGloballyRigid; gain rank below k (with at least
    two vertices) -> NotGloballyRigid; at most d-k+1 vertices -> GloballyRigid;
    vertex-redundantly rigid with the rank-d side condition at k = d ->
    GloballyRigid; otherwise Unknown (the sufficient condition is not
    necessary).
    """
    require_valid(graph)
    if k is None:
        k = graph.k
    n = len(graph.vertices)
    base = is_rigid(graph, d, k, lattice, trials, seed)
    if not base.rigid:
        return GlobalVerdict(
            NOT_GLOBALLY_RIGID, "not-rigid", {"rigidity": base.to_json()}, trials, seed
        )
    g_rank = gain_rank(graph)
    if n >= 2 and g_rank < k:
        return GlobalVerdict(
            NOT_GLOBALLY_RIGID,
            "gain-rank-below-k",
            {"gain_rank": g_rank, "k": k, "rigidity": base.to_json()},
            trials,
            seed,
        )
    if n <= d - k + 1:
        return GlobalVerdict(
            GLOBALLY_RIGID,
            "small-graph-corollary",
            {"vertices": n, "bound": d - k + 1, "rigidity": base.to_json()},
            trials,
            seed,
        )
    vrr, details = is_vertex_redundantly_rigid(graph, d, k, lattice, trials, seed)
    if vrr and (k < d or g_rank == d):
        return GlobalVerdict(
            GLOBALLY_RIGID,
            "thm-2-rigid-and-rank",
            {"gain_rank": g_rank, "vertex_deletions": details, "rigidity": base.to_json()},
            trials,
            seed,
        )
    return GlobalVerdict(
        UNKNOWN,
        "inconclusive",
        {
            "gain_rank": g_rank,
            "vertex_redundantly_rigid": vrr,
            "vertex_deletions": details,
            "rigidity": base.to_json(),
        },
        trials,
        seed,
    )
