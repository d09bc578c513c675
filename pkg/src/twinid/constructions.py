"""Generators for the extremal split-graph families and seeded random graphs.

Index layout is fixed: the clique block comes first, then the stable block
in label order, then any planted twin copies in insertion order.

Random graphs use numpy's PCG64 bit generator seeded with the given integer,
and edges are sampled for pairs (u, v), u < v, in lexicographic order.  Both
choices are part of the reproducibility contract.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import Coloring
from .graph import Graph, build_graph
from .twins import add_twins, quotient, twin_partition


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]
    family: str
    params: dict

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def to_json(self) -> dict:
        return {"family": self.family, "params": self.params, "labels": list(self.labels)}


def subset_label(mask: int) -> str:
    members = [str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(members) + "}"


def gen_Hp(p: int) -> LabeledGraph:
    """Split graph: clique k_0..k_p, stable set s_1..s_p, pendant edges s_i k_i."""
    if p < 1:
        raise ValueError("H_p needs p >= 1")
    edges = [(i, j) for i in range(p + 1) for j in range(i + 1, p + 1)]
    edges += [(p + i, i) for i in range(1, p + 1)]
    labels = [f"k_{i}" for i in range(p + 1)] + [f"s_{i}" for i in range(1, p + 1)]
    return LabeledGraph(build_graph(2 * p + 1, edges), tuple(labels), "hp", {"p": p})


def gen_Hext(a: int) -> LabeledGraph:
    """Clique {k_E : E subset of 1..a} plus, for each i in E, a vertex s_{E,i}.

    Each group {k_E} + {s_{E,i} : i in E} is a clique; subsets E are encoded
    as bitmasks and k_{} stands for the k_0 vertex of H_p.
    """
    if a < 1:
        raise ValueError("H^ext needs a >= 1")
    size = 1 << a
    labels = [f"k_{subset_label(E)}" for E in range(size)]
    edges = [(i, j) for i in range(size) for j in range(i + 1, size)]
    for E in range(1, size):
        group = [E]
        for i in range(a):
            if E >> i & 1:
                group.append(len(labels))
                labels.append(f"s_{subset_label(E)}_{i + 1}")
        edges += [(x, y) for ix, x in enumerate(group) for y in group[ix + 1:]]
    return LabeledGraph(build_graph(len(labels), edges), tuple(labels), "hext", {"a": a})


def gen_HTt(p: int, T: int, t: int) -> LabeledGraph:
    """H_p with T-1 twins planted on each of k_1..k_t."""
    if not (p >= t >= 1 and T >= 1):
        raise ValueError("H_p^(T,t) needs p >= t >= 1 and T >= 1")
    base = gen_Hp(p)
    g = base.graph
    labels = list(base.labels)
    for i in range(1, t + 1):
        g = add_twins(g, i, T - 1)
        labels += [f"k_{i}#{j}" for j in range(1, T)]
    return LabeledGraph(g, tuple(labels), "htt", {"p": p, "T": T, "t": t})


def canonical_coloring(lg: LabeledGraph, variant: str) -> Coloring:
    """The explicit colorings used to certify the upper bounds on the families."""
    n = lg.graph.n
    if variant == "lid" and lg.family in ("hp", "htt"):
        return Coloring(tuple(range(1, n + 1)))
    if lg.family == "hp" and variant == "id":
        p = lg.params["p"]
        colors = [p + 2] + [p + 1] * p + list(range(1, p + 1))
        return Coloring(tuple(colors))
    if lg.family == "hext" and variant in ("id", "lid"):
        a = lg.params["a"]
        colors = [0] * n
        for v, label in enumerate(lg.labels):
            if label.startswith("s_"):
                colors[v] = int(label.rsplit("_", 1)[1])
        clique = range(1 << a)
        if variant == "id":
            for E in clique:
                colors[E] = a + 1
            colors[0] = a + 2
        else:
            for E in clique:
                colors[E] = a + 1 + E
        return Coloring(tuple(colors))
    raise ValueError(f"no canonical {variant} coloring for family {lg.family!r}")


def gen_random(n: int, edge_probability: float, seed: int) -> Graph:
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    return _sample(rng, n, edge_probability)


def _sample(rng: np.random.Generator, n: int, prob: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return build_graph(n, edges)


def random_twin_graph(seed: int, max_n: int = 9, max_class: int = 3, min_base: int = 3) -> Graph:
    """Random graph with planted twin classes, for bound-checking corpora.

    A base graph on ``min_base``..``max_n - 2`` vertices is drawn and reduced
    to its twin quotient, so every twin class comes from planting; then each
    base vertex, with probability 1/2, receives one or two new twins while the
    vertex count stays within ``max_n`` and its twin class within ``max_class``.
    At least one twin pair is always present.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    n0 = int(rng.integers(min_base, max(min_base, max_n - 2) + 1))
    prob = float(rng.uniform(0.2, 0.8))
    g = quotient(_sample(rng, n0, prob)).quotient
    n0 = g.n
    for v in range(n0):
        if rng.random() >= 0.5:
            continue
        extra = int(rng.integers(1, max_class))
        room = min(max_n - g.n, max_class - twin_partition(g).class_size_of(v))
        if room > 0:
            g = add_twins(g, v, min(extra, room))
    if twin_partition(g).t == 0:
        g = add_twins(g, int(rng.integers(0, n0)), 1)
    return g


def random_twin_corpus(count: int, start_seed: int = 0, **kwargs) -> list[Graph]:
    return [random_twin_graph(start_seed + i, **kwargs) for i in range(count)]
