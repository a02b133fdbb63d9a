"""Shared builders for the test suite."""

import random
from fractions import Fraction

from perigid.framework import Framework, identity_lattice
from perigid.gain_graph import BODY_BAR, GainEdge, GainGraph, gain_graph


def fig2_graph() -> GainGraph:
    """Two vertex orbits joined by two parallel edges with gains (0,0), (1,0)."""
    return gain_graph(2, ["a", "b"], [("a", "b", (0, 0)), ("a", "b", (1, 0))])


def fig2_framework() -> Framework:
    placement = {
        "a": (Fraction(0), Fraction(0)),
        "b": (Fraction(2, 5), Fraction(3, 7)),
    }
    return Framework(fig2_graph(), identity_lattice(2, 2), placement)


def fig2_flip_placement() -> dict:
    """Reflection of b across the axis through a in the (1,0) direction:
    equivalent but not congruent to the fig2 placement."""
    return {
        "a": (Fraction(0), Fraction(0)),
        "b": (Fraction(2, 5), Fraction(-3, 7)),
    }


def triangle() -> GainGraph:
    return gain_graph(0, ["a", "b", "c"], [("a", "b", ()), ("b", "c", ()), ("a", "c", ())])


def four_cycle() -> GainGraph:
    return gain_graph(
        0,
        ["a", "b", "c", "d"],
        [("a", "b", ()), ("b", "c", ()), ("c", "d", ()), ("a", "d", ())],
    )


def complete_graph(n: int, k: int = 0) -> GainGraph:
    verts = [f"v{i}" for i in range(n)]
    edges = [
        (u, v, (0,) * k) for i, u in enumerate(verts) for v in verts[i + 1 :]
    ]
    return gain_graph(k, verts, edges)


def random_bar_joint_graph(rng: random.Random, k: int, n: int, max_edges: int) -> GainGraph:
    verts = [f"v{i}" for i in range(n)]
    edges = []
    seen = set()
    for _ in range(max_edges):
        if n < 2:
            break
        u, v = rng.sample(verts, 2)
        g = tuple(rng.randint(-2, 2) for _ in range(k))
        key = (u, v, g) if u < v else (v, u, tuple(-x for x in g))
        if key in seen:
            continue
        seen.add(key)
        edges.append((u, v, g))
    return gain_graph(k, verts, edges)


def random_body_bar_multigraph(rng: random.Random, d: int, k: int) -> GainGraph:
    """Instance from the oracle-equivalence corpus: up to 3 bodies, up to 5
    bars, gains in {-2..2}^k, loops only with nonzero gain."""
    nv = rng.randint(1, 3)
    verts = [f"b{i}" for i in range(nv)]
    edges = []
    for i in range(rng.randint(0, 5)):
        if k >= 1 and rng.random() < 0.3:
            v = rng.choice(verts)
            while True:
                g = tuple(rng.randint(-2, 2) for _ in range(k))
                if any(g):
                    break
            edges.append(GainEdge(f"h{i}", v, v, g))
        elif nv >= 2:
            u, v = rng.sample(verts, 2)
            g = tuple(rng.randint(-2, 2) for _ in range(k))
            edges.append(GainEdge(f"h{i}", u, v, g))
    return GainGraph(k, tuple(verts), tuple(edges), BODY_BAR)
