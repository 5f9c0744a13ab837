"""Cheeger constants, sweep cuts and L1 Sobolev ratios on weighted graphs.

Volumes are sums of weighted degrees, cuts are sums of crossing weights:

    h(G) = min_S cut(S) / min(vol S, vol V \\ S)
    s(G) = inf_f  sum_e w_e |f(u) - f(v)|  /  min_a sum_i d_i |f_i - a|
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import GraphError, TooLarge, WeightedGraph

EXACT_LIMIT = 24
_CHUNK = 1 << 15


class DegenerateOrder(GraphError):
    pass


class ConstantFunction(GraphError):
    pass


@dataclass(frozen=True)
class Cut:
    ratio: float
    subset: frozenset[int]


def _ratio(cut: float, vs: float, vol: float) -> float:
    return cut / min(vs, vol - vs)


def cheeger_exact(g: WeightedGraph) -> Cut:
    """Exhaustive minimum over proper subsets containing vertex 0."""
    n = g.vertex_count
    if n > EXACT_LIMIT:
        raise TooLarge(f"exact Cheeger constant limited to {EXACT_LIMIT} vertices")
    if n < 2:
        raise GraphError("need at least two vertices")
    d = g.degrees()
    vol = d.sum()
    eu, ev, ew = g.edge_arrays()
    total = 1 << (n - 1)
    best = np.inf
    best_mask = 0
    shifts = np.arange(1, n)
    # subsets are 1 | (k << 1) for k < total - 1; k = total - 1 is all of V
    for start in range(0, total - 1, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total - 1), dtype=np.int64)
        bits = np.empty((len(ks), n), dtype=bool)
        bits[:, 0] = True
        bits[:, 1:] = (ks[:, None] >> (shifts[None, :] - 1)) & 1
        vs = bits @ d
        cut = (bits[:, eu] != bits[:, ev]) @ ew
        r = cut / np.minimum(vs, vol - vs)
        i = int(np.argmin(r))
        if r[i] < best:
            best = float(r[i])
            best_mask = int(ks[i])
    subset = frozenset([0] + [j for j in range(1, n) if (best_mask >> (j - 1)) & 1])
    return Cut(best, subset)


def cheeger_sweep(g: WeightedGraph, order) -> Cut:
    """Best of the n - 1 prefix cuts of the vertices sorted by ``order``."""
    x = np.asarray(order, dtype=float)
    if x.shape != (g.vertex_count,):
        raise ValueError("order vector needs one entry per vertex")
    if np.all(x == x[0]):
        raise DegenerateOrder("constant order vector has no threshold cut")
    idx = np.argsort(x, kind="stable")
    d = g.degrees()
    vol = d.sum()
    pos = np.empty_like(idx)
    pos[idx] = np.arange(len(idx))
    # cut of prefix k = sum of weights of edges with exactly one end among the first k
    eu, ev, ew = g.edge_arrays()
    lo = np.minimum(pos[eu], pos[ev])
    hi = np.maximum(pos[eu], pos[ev])
    delta = np.zeros(g.vertex_count + 1)
    np.add.at(delta, lo + 1, ew)
    np.add.at(delta, hi + 1, -ew)
    cuts = np.cumsum(delta)[1:-1]
    vs = np.cumsum(d[idx])[:-1]
    r = cuts / np.minimum(vs, vol - vs)
    k = int(np.argmin(r))
    return Cut(float(r[k]), frozenset(int(i) for i in idx[: k + 1]))


def gradient_l1(g: WeightedGraph, f) -> np.ndarray:
    """sum_e w |f(u) - f(v)|, vectorized over leading axes of f."""
    f = np.asarray(f, dtype=float)
    eu, ev, ew = g.edge_arrays()
    return np.abs(f[..., eu] - f[..., ev]) @ ew


def gradient_l2sq(g: WeightedGraph, f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    eu, ev, ew = g.edge_arrays()
    return (f[..., eu] - f[..., ev]) ** 2 @ ew


def weighted_median(values, weights) -> np.ndarray:
    """A minimizer of a -> sum_i w_i |x_i - a|, row-wise.

    The first sorted value where the cumulative weight reaches half the total.
    """
    x = np.atleast_2d(np.asarray(values, dtype=float))
    w = np.asarray(weights, dtype=float)
    idx = np.argsort(x, axis=1, kind="stable")
    xs = np.take_along_axis(x, idx, axis=1)
    cw = np.cumsum(w[idx], axis=1)
    half = cw[:, -1:] / 2
    k = np.argmax(cw >= half * (1 - 1e-15), axis=1)
    med = xs[np.arange(len(xs)), k]
    return med if np.ndim(values) > 1 else med[0]


def shifted_l1_min(f, weights) -> np.ndarray:
    """min_a sum_i w_i |f_i - a| (attained at a weighted median)."""
    f = np.asarray(f, dtype=float)
    w = np.asarray(weights, dtype=float)
    a = weighted_median(f, w)
    return np.abs(f - np.asarray(a)[..., None]) @ w


def sobolev_ratio(g: WeightedGraph, f):
    """L1 Sobolev quotient of f; accepts a single function or a stack of them (rows)."""
    f = np.asarray(f, dtype=float)
    single = f.ndim == 1
    F = np.atleast_2d(f)
    if F.shape[1] != g.vertex_count:
        raise ValueError("function needs one value per vertex")
    if np.any(np.all(F == F[:, :1], axis=1)):
        raise ConstantFunction("Sobolev ratio undefined for constant functions")
    r = gradient_l1(g, F) / shifted_l1_min(F, g.degrees())
    return float(r[0]) if single else r


def coarea_integral(g: WeightedGraph, f) -> float:
    """integral over t of cut({f > t}), summed exactly over the level gaps."""
    f = np.asarray(f, dtype=float)
    levels = np.unique(f)
    total = 0.0
    for a, b in zip(levels[:-1], levels[1:]):
        total += (b - a) * g.cut(np.flatnonzero(f > a))
    return total


def indicator(g: WeightedGraph, subset) -> np.ndarray:
    f = np.zeros(g.vertex_count)
    f[list(subset)] = 1.0
    return f
