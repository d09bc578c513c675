"""Simple undirected graphs on vertices 0..n-1, plus the edge-list and DIMACS readers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, parse errors)."""


VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    # bit v of closed_masks[u] is set iff v is in N[u]
    closed_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match n")
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise GraphError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.n or u not in self.adjacency[v]:
                    raise GraphError(f"asymmetric or out-of-range adjacency {u}-{v}")
        masks = []
        for u, nbrs in enumerate(self.adjacency):
            m = 1 << u
            for v in nbrs:
                m |= 1 << v
            masks.append(m)
        object.__setattr__(self, "closed_masks", tuple(masks))

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def closed_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.closed_masks[v]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    g._check_vertex(v)
    return frozenset(g.adjacency[v] | {v})


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _content_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header followed by m lines "u v" (0-based)."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphError("empty input: expected header 'n m'") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphError(f"line {lineno}: malformed header {header!r}, expected 'n m'")
    n, m = int(parts[0]), int(parts[1])
    if n < 1:
        raise GraphError(f"line {lineno}: vertex count must be >= 1")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: malformed edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise GraphError(f"index out of range at line {lineno}: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop ({u}, {v})")
        edges.append((u, v))
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges])


def parse_dimacs(text: str) -> Graph:
    """DIMACS .col input: 'p edge n m' header and 1-based 'e u v' lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4:
                raise GraphError(f"line {lineno}: malformed problem line {raw.strip()!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before 'p' line")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge line {raw.strip()!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {lineno}: index out of range")
            if u == v:
                raise GraphError(f"line {lineno}: self-loop")
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge n m' line")
    return build_graph(n, edges)


def load_graph(path) -> Graph:
    """Read a graph file; ``.col`` files are read as DIMACS, everything else as an edge list."""
    with open(path) as f:
        text = f.read()
    if str(path).endswith(".col"):
        return parse_dimacs(text)
    return parse_edge_list(text)
