"""Weighted graphs, edge signings and their normalized Laplacians."""

from __future__ import annotations

from collections import deque
from dataclasses import InitVar, dataclass, field
from typing import Iterable, Sequence

import numpy as np

MAX_DENSE = 2048
RESIDUAL_TOL = 1e-10


class GraphError(ValueError):
    pass


class Disconnected(GraphError):
    pass


class TooLarge(GraphError):
    pass


Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive edge weights.

    Edges are normalized to ``u < v``; loops and repeated pairs are rejected.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    require_connected: InitVar[bool] = True

    def __post_init__(self, require_connected: bool) -> None:
        n = self.vertex_count
        if n < 1:
            raise GraphError("need at least one vertex")
        norm = []
        seen = set()
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise GraphError(f"loop at {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if not w > 0:
                raise GraphError(f"edge ({u}, {v}) has non-positive weight {w}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v, w))
        object.__setattr__(self, "edges", tuple(norm))
        if require_connected and not self.is_connected():
            raise Disconnected("graph is not connected")

    @classmethod
    def unweighted(cls, n: int, pairs: Iterable[tuple[int, int]], **kw) -> "WeightedGraph":
        return cls(n, tuple((u, v, 1.0) for u, v in pairs), **kw)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def components(self) -> list[int]:
        """Component label per vertex."""
        adj = self.neighbors()
        label = [-1] * self.vertex_count
        c = 0
        for s in range(self.vertex_count):
            if label[s] >= 0:
                continue
            label[s] = c
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if label[y] < 0:
                        label[y] = c
                        queue.append(y)
            c += 1
        return label

    def is_connected(self) -> bool:
        return max(self.components()) == 0

    def weight_matrix(self) -> np.ndarray:
        W = np.zeros((self.vertex_count, self.vertex_count))
        for u, v, w in self.edges:
            W[u, v] = W[v, u] = w
        return W

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.vertex_count)
        for u, v, w in self.edges:
            d[u] += w
            d[v] += w
        return d

    def volume(self, subset: Iterable[int] | None = None) -> float:
        d = self.degrees()
        return float(d.sum() if subset is None else d[list(subset)].sum())

    def cut(self, subset: Iterable[int]) -> float:
        s = set(subset)
        return float(sum(w for u, v, w in self.edges if (u in s) != (v in s)))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.edges:
            return np.zeros(0, int), np.zeros(0, int), np.zeros(0)
        u, v, w = zip(*self.edges)
        return np.array(u), np.array(v), np.array(w, dtype=float)

    def permuted(self, perm: Sequence[int]) -> "WeightedGraph":
        """Relabel vertex i as perm[i]."""
        return WeightedGraph(
            self.vertex_count,
            tuple((perm[u], perm[v], w) for u, v, w in self.edges),
            require_connected=False,
        )


@dataclass(frozen=True)
class Signing:
    """A +1/-1 label per edge index of a graph."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if any(s not in (1, -1) for s in self.signs):
            raise GraphError("signs must be +1 or -1")

    @classmethod
    def trivial(cls, g: WeightedGraph) -> "Signing":
        return cls((1,) * g.edge_count)

    def check(self, g: WeightedGraph) -> None:
        if len(self.signs) != g.edge_count:
            raise GraphError(f"signing has {len(self.signs)} labels for {g.edge_count} edges")

    def nontrivial_cohomology(self, g: WeightedGraph) -> bool:
        """True iff some cycle has sign product -1.

        Tree potentials: propagate a +-1 potential along a BFS forest so that tree
        edges satisfy sign = pot(u) pot(v); a non-tree edge breaking this closes
        a negative cycle.
        """
        self.check(g)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
        for i, (u, v, _) in enumerate(g.edges):
            adj[u].append((v, self.signs[i]))
            adj[v].append((u, self.signs[i]))
        pot = [0] * g.vertex_count
        for s in range(g.vertex_count):
            if pot[s]:
                continue
            pot[s] = 1
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y, sg in adj[x]:
                    if not pot[y]:
                        pot[y] = pot[x] * sg
                        queue.append(y)
        return any(pot[u] * pot[v] != s for (u, v, _), s in zip(g.edges, self.signs))


def _check_size(g: WeightedGraph) -> None:
    if g.vertex_count > MAX_DENSE:
        raise TooLarge(f"{g.vertex_count} vertices exceeds the dense limit {MAX_DENSE}")


def _normalize(W: np.ndarray, d: np.ndarray) -> np.ndarray:
    if np.any(d <= 0):
        raise GraphError("isolated vertex")
    r = 1.0 / np.sqrt(d)
    L = np.eye(len(d)) - r[:, None] * W * r[None, :]
    return (L + L.T) / 2


def normalized_laplacian(g: WeightedGraph) -> np.ndarray:
    """I - D^-1/2 W D^-1/2."""
    _check_size(g)
    return _normalize(g.weight_matrix(), g.degrees())


def signed_weight_matrix(g: WeightedGraph, s: Signing) -> np.ndarray:
    s.check(g)
    W = np.zeros((g.vertex_count, g.vertex_count))
    for (u, v, w), sg in zip(g.edges, s.signs):
        W[u, v] = W[v, u] = sg * w
    return W


def signed_laplacian(g: WeightedGraph, s: Signing) -> np.ndarray:
    """I - D^-1/2 W^s D^-1/2 with W^s(u, v) = s(uv) w(uv); acts on odd functions of the cover."""
    _check_size(g)
    return _normalize(signed_weight_matrix(g, s), g.degrees())


def spectrum(L: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(L)


@dataclass(frozen=True)
class Eigenpair:
    value: float
    vector: np.ndarray = field(compare=False)
    residual: float


def _residual(L: np.ndarray, lam: float, x: np.ndarray) -> float:
    return float(np.linalg.norm(L @ x - lam * x))


def canonical_bottom_vector(L: np.ndarray, index: int = 0, tol: float = 1e-9) -> Eigenpair:
    """Eigenpair for the index-th smallest eigenvalue with a basis-independent vector.

    Within a (possibly degenerate) eigenspace the chosen vector is the normalized
    projection of the first standard basis vector not orthogonal to it, so the
    first nonzero coordinate is positive and the choice does not depend on
    the solver's basis.
    """
    vals, vecs = np.linalg.eigh(L)
    lam = vals[index]
    scale = max(1.0, float(np.abs(vals).max()))
    mask = np.abs(vals - lam) <= tol * scale
    basis = vecs[:, mask]
    x = None
    for i in range(L.shape[0]):
        proj = basis @ basis[i, :]
        nrm = np.linalg.norm(proj)
        if nrm > 1e-8:
            x = proj / nrm
            break
    assert x is not None
    lam = float(x @ L @ x)
    return Eigenpair(lam, x, _residual(L, lam, x))


def lambda1_pair(g: WeightedGraph) -> Eigenpair:
    if not g.is_connected():
        raise Disconnected("lambda1 of a disconnected graph is 0")
    if g.vertex_count < 2:
        raise GraphError("lambda1 needs at least two vertices")
    L = normalized_laplacian(g)
    pair = canonical_bottom_vector(L, index=1)
    if pair.residual > RESIDUAL_TOL * max(1.0, np.linalg.norm(L, 2)):
        raise ArithmeticError(f"eigen residual {pair.residual:.3g} exceeds contract")
    return pair


def lambda1(g: WeightedGraph) -> float:
    """Second smallest eigenvalue of the normalized Laplacian."""
    return lambda1_pair(g).value


def fiedler_vector(g: WeightedGraph) -> np.ndarray:
    """Degree-scaled Fiedler function D^-1/2 x (the Rayleigh minimizer as a vertex function)."""
    pair = lambda1_pair(g)
    return pair.vector / np.sqrt(g.degrees())
