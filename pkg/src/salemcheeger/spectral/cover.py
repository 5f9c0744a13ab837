"""Double covers of weighted graphs defined by edge signings."""

from __future__ import annotations

import numpy as np

from .graph import GraphError, Signing, WeightedGraph, normalized_laplacian, signed_laplacian, spectrum


class TrivialCover(GraphError):
    pass


def double_cover(g: WeightedGraph, s: Signing, require_connected: bool = True) -> WeightedGraph:
    """Vertices (u, i) -> u + i*n; a negative edge swaps sheets.

    Raises TrivialCover when a connected cover is requested but every cycle of g
    has positive sign product.
    """
    s.check(g)
    n = g.vertex_count
    if require_connected and not s.nontrivial_cohomology(g):
        raise TrivialCover("signing is a coboundary; the cover is two copies of the base")
    edges = []
    for (u, v, w), sg in zip(g.edges, s.signs):
        if sg > 0:
            edges.append((u, v, w))
            edges.append((u + n, v + n, w))
        else:
            edges.append((u, v + n, w))
            edges.append((u + n, v, w))
    return WeightedGraph(2 * n, tuple(edges), require_connected=require_connected)


def deck_involution(n: int) -> np.ndarray:
    """Permutation (u, i) -> (u, 1 - i) on the 2n cover vertices."""
    return np.concatenate([np.arange(n, 2 * n), np.arange(n)])


def lift_even(f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    return np.concatenate([f, f])


def lift_odd(f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    return np.concatenate([f, -f])


def union_spectrum(g: WeightedGraph, s: Signing) -> np.ndarray:
    """spec(L) together with spec(L^s), sorted."""
    return np.sort(np.concatenate([spectrum(normalized_laplacian(g)), spectrum(signed_laplacian(g, s))]))


def cover_spectrum(g: WeightedGraph, s: Signing) -> np.ndarray:
    return spectrum(normalized_laplacian(double_cover(g, s, require_connected=False)))
