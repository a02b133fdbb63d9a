"""Directed multigraphs with edge gains in Z^k and the operations on them.

Gains are written additively: reversing an edge negates its gain, a switching
at a vertex adds a fixed vector to every outgoing gain and subtracts it from
every incoming one.  A graph is either in "bar-joint" mode (no loops, no
parallel edges with equal gain) or "body-bar" mode (loops with nonzero gain
and equal-gain parallels allowed).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .linalg import integer_rank

BAR_JOINT = "bar-joint"
BODY_BAR = "body-bar"

GainVector = tuple[int, ...]


class InvalidGainGraphError(ValueError):
    """Raised when an operation requires a graph that passes validation."""


def _vec_add(a: GainVector, b: GainVector) -> GainVector:
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a: GainVector, b: GainVector) -> GainVector:
    return tuple(x - y for x, y in zip(a, b))


def _vec_neg(a: GainVector) -> GainVector:
    return tuple(-x for x in a)


@dataclass(frozen=True)
class GainEdge:
    id: str
    tail: str
    head: str
    gain: GainVector

    def is_loop(self) -> bool:
        return self.tail == self.head

    def reversed(self) -> "GainEdge":
        return GainEdge(self.id, self.head, self.tail, _vec_neg(self.gain))


@dataclass(frozen=True)
class GainGraph:
    k: int
    vertices: tuple[str, ...]
    edges: tuple[GainEdge, ...]
    mode: str = BAR_JOINT

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("periodicity rank must be >= 0")
        if self.mode not in (BAR_JOINT, BODY_BAR):
            raise ValueError(f"unknown mode {self.mode!r}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        vset = set(self.vertices)
        seen_ids = set()
        for e in self.edges:
            if e.id in seen_ids:
                raise ValueError(f"duplicate edge id {e.id!r}")
            seen_ids.add(e.id)
            if e.tail not in vset or e.head not in vset:
                raise ValueError(f"edge {e.id!r} references unknown vertex")
            if len(e.gain) != self.k:
                raise ValueError(f"edge {e.id!r} gain has length {len(e.gain)}, expected {self.k}")

    def edge(self, edge_id: str) -> GainEdge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(f"unknown edge {edge_id!r}")

    def incident(self, v: str) -> list[GainEdge]:
        return [e for e in self.edges if e.tail == v or e.head == v]

    def delete_vertex(self, v: str) -> "GainGraph":
        if v not in self.vertices:
            raise KeyError(f"unknown vertex {v!r}")
        return GainGraph(
            self.k,
            tuple(w for w in self.vertices if w != v),
            tuple(e for e in self.edges if e.tail != v and e.head != v),
            self.mode,
        )

    def delete_edge(self, edge_id: str) -> "GainGraph":
        self.edge(edge_id)
        return GainGraph(
            self.k,
            self.vertices,
            tuple(e for e in self.edges if e.id != edge_id),
            self.mode,
        )


def gain_graph(k, vertices, edges, mode=BAR_JOINT) -> GainGraph:
    """Convenience constructor; edges are (id, tail, head, gain) tuples or
    (tail, head, gain) with ids assigned as e0, e1, ..."""
    built = []
    for i, spec in enumerate(edges):
        if len(spec) == 4:
            eid, tail, head, gain = spec
        else:
            tail, head, gain = spec
            eid = f"e{i}"
        built.append(GainEdge(eid, tail, head, tuple(gain)))
    return GainGraph(k, tuple(vertices), tuple(built), mode)


@dataclass(frozen=True)
class Violation:
    kind: str
    edges: tuple[str, ...]
    message: str


def validate(graph: GainGraph) -> list[Violation]:
    """Check the mode-dependent invariants; returns all violations found."""
    out: list[Violation] = []
    zero = (0,) * graph.k
    if graph.mode == BAR_JOINT:
        for e in graph.edges:
            if e.is_loop():
                out.append(Violation("loop", (e.id,), f"loop {e.id!r} not allowed in bar-joint mode"))
        seen: dict[tuple[str, str, GainVector], str] = {}
        for e in graph.edges:
            if e.is_loop():
                continue
            # canonical orientation so that a->b gain g and b->a gain -g collide
            if e.head < e.tail:
                key = (e.head, e.tail, _vec_neg(e.gain))
            else:
                key = (e.tail, e.head, e.gain)
            if key in seen:
                out.append(
                    Violation(
                        "parallel-equal-gain",
                        (seen[key], e.id),
                        f"edges {seen[key]!r} and {e.id!r} are parallel with the same gain",
                    )
                )
            else:
                seen[key] = e.id
    else:
        for e in graph.edges:
            if e.is_loop() and e.gain == zero:
                out.append(Violation("identity-loop", (e.id,), f"loop {e.id!r} has identity gain"))
    return out


def require_valid(graph: GainGraph) -> GainGraph:
    violations = validate(graph)
    if violations:
        raise InvalidGainGraphError("; ".join(v.message for v in violations))
    return graph


def switch(graph: GainGraph, v: str, gamma: GainVector) -> GainGraph:
    """Add `gamma` to every gain leaving v, subtract from every gain entering v."""
    if v not in graph.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    gamma = tuple(gamma)
    if len(gamma) != graph.k:
        raise ValueError("switching vector has wrong length")
    new_edges = []
    for e in graph.edges:
        if e.is_loop() or (e.tail != v and e.head != v):
            new_edges.append(e)
        elif e.tail == v:
            new_edges.append(GainEdge(e.id, e.tail, e.head, _vec_add(e.gain, gamma)))
        else:
            new_edges.append(GainEdge(e.id, e.tail, e.head, _vec_sub(e.gain, gamma)))
    return GainGraph(graph.k, graph.vertices, tuple(new_edges), graph.mode)


def reverse_edge(graph: GainGraph, edge_id: str) -> GainGraph:
    graph.edge(edge_id)  # raises on unknown id
    return GainGraph(
        graph.k,
        graph.vertices,
        tuple(e.reversed() if e.id == edge_id else e for e in graph.edges),
        graph.mode,
    )


def cycle_space_generators(graph: GainGraph, edge_ids=None) -> list[GainVector]:
    """Gains of a generating set of closed walks of the subgraph on `edge_ids`.

    Per connected component: spanning-tree potentials, one generator per
    non-tree edge; loops are their own generators.
    """
    if edge_ids is None:
        subset = list(graph.edges)
    else:
        wanted = set(edge_ids)
        subset = [e for e in graph.edges if e.id in wanted]
        missing = wanted - {e.id for e in subset}
        if missing:
            raise KeyError(f"unknown edges {sorted(missing)!r}")
    zero = (0,) * graph.k
    adj: dict[str, list[tuple[str, GainVector]]] = {}
    loops: list[GainEdge] = []
    nonloop: list[GainEdge] = []
    for e in subset:
        if e.is_loop():
            loops.append(e)
        else:
            nonloop.append(e)
            adj.setdefault(e.tail, [])
            adj.setdefault(e.head, [])
    for e in nonloop:
        adj[e.tail].append((e.head, e.gain))
        adj[e.head].append((e.tail, _vec_neg(e.gain)))
    generators = [e.gain for e in loops]
    potential: dict[str, GainVector] = {}
    for root in sorted(adj):
        if root in potential:
            continue
        potential[root] = zero
        stack = [root]
        while stack:
            u = stack.pop()
            for w, g in adj[u]:
                if w not in potential:
                    potential[w] = _vec_add(potential[u], g)
                    stack.append(w)
    # every edge closes a walk through spanning-forest potentials; tree edges
    # contribute the zero vector and are harmless to include
    for e in nonloop:
        g = _vec_sub(_vec_add(potential[e.tail], e.gain), potential[e.head])
        if g != zero:
            generators.append(g)
    return generators


def gain_rank(graph: GainGraph, edge_ids=None) -> int:
    """Rank of the subgroup of Z^k generated by closed-walk gains of the
    subgraph spanned by `edge_ids` (all edges when omitted)."""
    gens = cycle_space_generators(graph, edge_ids)
    return integer_rank(gens, graph.k)


def cone_contract(graph: GainGraph, v: str) -> GainGraph:
    """Remove v and insert u->w with gain psi(vw)-psi(vu) for every pair of
    edges vu, vw at v with u != w, unless that covering edge already exists."""
    if graph.mode != BAR_JOINT:
        raise InvalidGainGraphError("cone contraction is defined for bar-joint graphs")
    if v not in graph.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    # orient every edge at v to leave v
    at_v = []
    for e in graph.edges:
        if e.tail == v:
            at_v.append(e)
        elif e.head == v:
            at_v.append(e.reversed())
    rest = [e for e in graph.edges if e.tail != v and e.head != v]

    def present(edges, tail, head, gain):
        for e in edges:
            if e.tail == tail and e.head == head and e.gain == gain:
                return True
            if e.tail == head and e.head == tail and e.gain == _vec_neg(gain):
                return True
        return False

    new_edges = list(rest)
    for e1, e2 in combinations(sorted(at_v, key=lambda e: e.id), 2):
        u, w = e1.head, e2.head
        if u == w:  # parallel pair, would create a loop
            continue
        gain = _vec_sub(e2.gain, e1.gain)
        if not present(new_edges, u, w, gain):
            new_edges.append(GainEdge(f"{e1.id}*{e2.id}", u, w, gain))
    return GainGraph(
        graph.k,
        tuple(w for w in graph.vertices if w != v),
        tuple(new_edges),
        graph.mode,
    )


@dataclass(frozen=True)
class CoveringWindow:
    radius: int
    k: int
    vertices: tuple[tuple[str, GainVector], ...]
    edges: tuple[tuple[tuple[str, GainVector], tuple[str, GainVector]], ...]


def covering_window(graph: GainGraph, radius: int) -> CoveringWindow:
    """Finite window of the covering: one copy of each quotient vertex per
    shift in [-radius, radius]^k, and every covering edge inside the window."""
    if radius < 0:
        raise ValueError("window radius must be >= 0")
    shifts = [tuple(s) for s in product(range(-radius, radius + 1), repeat=graph.k)]
    vertices = tuple(sorted((v, s) for v in graph.vertices for s in shifts))
    inside = set(vertices)
    edges = set()
    for e in graph.edges:
        for s in shifts:
            a = (e.tail, s)
            b = (e.head, _vec_add(s, e.gain))
            if a in inside and b in inside and a != b:
                edges.add((a, b) if a <= b else (b, a))
    return CoveringWindow(radius, graph.k, vertices, tuple(sorted(edges)))
