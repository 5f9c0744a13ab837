"""Graph text format: a header ``n m`` then ``u v w [s]`` per edge, 0-based."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, TextIO

from .graph import GraphError, Signing, WeightedGraph


def parse_graph(text: str, require_connected: bool = True) -> tuple[WeightedGraph, Optional[Signing]]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty graph file")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise GraphError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header promises {m} edges, found {len(body)}")
    edges, signs = [], []
    for ln in body:
        parts = ln.split()
        if len(parts) not in (3, 4):
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1]), float(parts[2])))
        if len(parts) == 4:
            signs.append(int(parts[3]))
    if signs and len(signs) != m:
        raise GraphError("either every edge or no edge carries a sign")
    g = WeightedGraph(n, tuple(edges), require_connected=require_connected)
    return g, (Signing(tuple(signs)) if signs else None)


def read_graph(path: str | Path, require_connected: bool = True) -> tuple[WeightedGraph, Optional[Signing]]:
    return parse_graph(Path(path).read_text(), require_connected)


def format_graph(g: WeightedGraph, s: Optional[Signing] = None) -> str:
    out = [f"{g.vertex_count} {g.edge_count}"]
    for i, (u, v, w) in enumerate(g.edges):
        line = f"{u} {v} {w!r}"
        if s is not None:
            line += f" {s.signs[i]}"
        out.append(line)
    return "\n".join(out) + "\n"


def write_graph(fh: TextIO, g: WeightedGraph, s: Optional[Signing] = None) -> None:
    fh.write(format_graph(g, s))
