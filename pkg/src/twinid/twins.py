"""Twin classes (vertices with equal closed neighborhoods) and the twin quotient."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def t(self) -> int:
        """Number of classes with at least two vertices."""
        return sum(1 for c in self.classes if len(c) >= 2)

    @property
    def T_max(self) -> int:
        return max(len(c) for c in self.classes)

    def class_size_of(self, v: int) -> int:
        # counts v itself
        return len(self.classes[self.class_of[v]])

    def same_class(self, u: int, v: int) -> bool:
        return self.class_of[u] == self.class_of[v]

    def to_json(self) -> dict:
        return {"classes": [list(c) for c in self.classes], "t": self.t, "T": self.T_max}


@dataclass(frozen=True)
class QuotientResult:
    quotient: Graph
    representative: tuple[int, ...]
    projection: tuple[int, ...]
    partition: TwinPartition


def twin_partition(g: Graph) -> TwinPartition:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_masks[v], []).append(v)
    # vertices are visited in increasing order, so each group is sorted and
    # dict insertion order is the order of smallest members
    classes = tuple(tuple(members) for members in groups.values())
    class_of = [0] * g.n
    for i, members in enumerate(classes):
        for v in members:
            class_of[v] = i
    return TwinPartition(classes, tuple(class_of))


def quotient(g: Graph, partition: TwinPartition | None = None) -> QuotientResult:
    part = partition or twin_partition(g)
    reps = tuple(c[0] for c in part.classes)
    edges = []
    for i, ci in enumerate(part.classes):
        for j in range(i + 1, len(part.classes)):
            cj = part.classes[j]
            adjacent = g.has_edge(ci[0], cj[0])
            if any(g.has_edge(x, y) != adjacent for x in ci for y in cj):
                raise AssertionError(f"twin classes {i} and {j} are partially adjacent")
            if adjacent:
                edges.append((i, j))
    return QuotientResult(build_graph(len(reps), edges), reps, part.class_of, part)


def is_twin_free(g: Graph) -> bool:
    return len(set(g.closed_masks)) == g.n


def add_twins(g: Graph, v: int, m: int) -> Graph:
    """Append ``m`` new vertices whose closed neighborhood equals N[v]."""
    g._check_vertex(v)
    if m < 0:
        raise ValueError("number of twins must be >= 0")
    edges = g.edges
    new = list(range(g.n, g.n + m))
    group = [v, *g.adjacency[v]]
    for i, w in enumerate(new):
        edges.extend((x, w) for x in group)
        edges.extend((new[j], w) for j in range(i))
    return build_graph(g.n + m, edges)
