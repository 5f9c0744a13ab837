"""Graph models: cycles, tori, pinched pairs, cyclic covers and random graphs."""

from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from .graph import Signing, WeightedGraph


def cycle(n: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return WeightedGraph.unweighted(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> WeightedGraph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return WeightedGraph.unweighted(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> WeightedGraph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return WeightedGraph.unweighted(n, itertools.combinations(range(n), 2))


def torus_grid(a: int, b: int) -> WeightedGraph:
    """a x b grid with wraparound; side length 2 gives a single (not doubled) edge."""
    if a < 2 or b < 2:
        raise ValueError("torus grid needs a, b >= 2")
    pairs = set()
    for i in range(a):
        for j in range(b):
            x = i * b + j
            for y in (((i + 1) % a) * b + j, i * b + (j + 1) % b):
                if x != y:
                    pairs.add((min(x, y), max(x, y)))
    return WeightedGraph.unweighted(a * b, sorted(pairs))


def pinched_pair(n: int, k: int, eps: float) -> WeightedGraph:
    """Two copies of K_n joined by k edges of weight eps (vertex i to vertex n + i)."""
    if n < 3 or k < 1 or k > n or eps <= 0:
        raise ValueError("pinched_pair needs n >= 3, 1 <= k <= n, eps > 0")
    edges = [(u, v, 1.0) for u, v in itertools.combinations(range(n), 2)]
    edges += [(n + u, n + v, 1.0) for u, v in itertools.combinations(range(n), 2)]
    edges += [(i, n + i, float(eps)) for i in range(k)]
    return WeightedGraph(2 * n, tuple(edges))


def cyclic_cover(g: WeightedGraph, base_edges: Iterable[int], m: int) -> WeightedGraph:
    """m-fold cyclic cover: edge e = (u, v) in base_edges joins (u, i) to (v, i + 1 mod m).

    Vertex (u, i) is numbered u + i * n.
    """
    if m < 2:
        raise ValueError("cyclic cover needs m >= 2")
    marked = set(base_edges)
    n = g.vertex_count
    edges = []
    for idx, (u, v, w) in enumerate(g.edges):
        shift = 1 if idx in marked else 0
        for i in range(m):
            edges.append((u + i * n, v + ((i + shift) % m) * n, w))
    return WeightedGraph(n * m, tuple(edges))


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5, max_tries: int = 1000) -> WeightedGraph:
    """Connected G(n, p) with unit weights, by rejection."""
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(max_tries):
        keep = rng.random(len(pairs)) < p
        chosen = [pr for pr, k in zip(pairs, keep) if k]
        g = WeightedGraph.unweighted(n, chosen, require_connected=False)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected G({n}, {p}) in {max_tries} tries")


def random_weighted_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> WeightedGraph:
    g = random_graph(rng, n, p)
    w = rng.uniform(0.1, 2.0, g.edge_count)
    return WeightedGraph(n, tuple((u, v, float(x)) for (u, v, _), x in zip(g.edges, w)))


def random_signing(rng: np.random.Generator, g: WeightedGraph, nontrivial: bool = True, max_tries: int = 1000) -> Signing:
    """Uniform +-1 signs; with ``nontrivial`` resampled until the cover is connected."""
    for _ in range(max_tries):
        s = Signing(tuple(int(x) for x in rng.choice([1, -1], size=g.edge_count)))
        if not nontrivial or s.nontrivial_cohomology(g):
            return s
    raise RuntimeError("could not draw a nontrivial signing (is the graph a tree?)")


def random_signed_instance(rng: np.random.Generator, n: int, p: float = 0.5) -> tuple[WeightedGraph, Signing]:
    """Connected graph with a cycle plus a signing whose cover is connected."""
    while True:
        g = random_graph(rng, n, p)
        if g.edge_count >= n:
            return g, random_signing(rng, g)
