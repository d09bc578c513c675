"""Exact optimum search for the identification parameters.

Colorings are enumerated as restricted growth strings over a fixed vertex
order (descending degree, ties by index): the vertex at position i may take
any color already used or the next unused one.  For a target palette size k
the search caps the block count at k and demands exactly k blocks at the
leaves; k ascends from a sound lower bound, so the first feasible k is the
optimum and every smaller k has been refuted exhaustively.

A partial coloring is pruned as soon as two relevant non-twin vertices whose
closed neighborhoods are both fully colored share a signature (signatures of
completed neighborhoods cannot change), or, for lid, when an edge is
monochromatic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import CHECKERS, Coloring, SetColoring, VARIANTS, is_identifying_code, is_weighted_identifying
from .graph import Graph
from .twins import twin_partition

EXHAUSTIVE_BELOW = "exhaustive-below"
LOWER_BOUND_MATCH = "lower-bound-match"


class InstanceTooLarge(Exception):
    pass


@dataclass
class SearchLimits:
    max_coloring_n: int = 14
    max_code_n: int = 20
    max_weighted_n: int = 8


DEFAULT_LIMITS = SearchLimits()


@dataclass
class SolveReport:
    variant: str
    optimum: int
    witness: object
    nodes_explored: int
    proof: str
    lower_bound: int = 0
    extra: dict = field(default_factory=dict)

    def witness_json(self):
        w = self.witness
        if isinstance(w, Coloring):
            return list(w.colors)
        if isinstance(w, SetColoring):
            return [sorted(s) for s in w.colors_of]
        return sorted(w)

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "optimum": self.optimum,
            "witness": self.witness_json(),
            "nodes": self.nodes_explored,
            "proof": self.proof,
        }


def search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by greedy growth from every start vertex."""
    order = search_order(g)
    best: list[int] = []
    for start in order:
        clique = [start]
        for v in order:
            if v != start and all(g.has_edge(v, u) for u in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def lower_bound(g: Graph, variant: str) -> int:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "lid":
        return len(greedy_clique(g))
    return 1


def _guard(n: int, limit: int, force: bool, what: str) -> None:
    if n > limit and not force:
        raise InstanceTooLarge(f"{what} search is limited to n <= {limit} (got n={n}); use force")


class _ColoringSearch:
    def __init__(self, g: Graph, variant: str):
        self.g = g
        self.variant = variant
        self.order = search_order(g)
        pos = [0] * g.n
        for i, v in enumerate(self.order):
            pos[v] = i
        self.pos = pos
        self.nbrs = [tuple(g.adjacency[v]) for v in range(g.n)]
        self.closed = [(v, *g.adjacency[v]) for v in range(g.n)]
        # completes[i]: vertices whose closed neighborhood is fully colored once position i is
        self.completes: list[list[int]] = [[] for _ in range(g.n)]
        for v in range(g.n):
            self.completes[max(pos[u] for u in self.closed[v])].append(v)
        self.class_of = twin_partition(g).class_of
        # earlier colored neighbors per position, for the properness test
        self.back_nbrs = [[u for u in self.nbrs[v] if pos[u] < pos[v]] for v in self.order]
        self.nodes = 0

    def solve(self, k: int) -> list[int] | None:
        self.k = k
        self.labels = [-1] * self.g.n
        self.sig = [0] * self.g.n
        self.seen: dict[int, int] = {}
        self.done = [False] * self.g.n
        if self._extend(0, 0):
            return list(self.labels)
        return None

    def _extend(self, i: int, used: int) -> bool:
        n = self.g.n
        if i == n:
            return used == self.k
        v = self.order[i]
        labels = self.labels
        top = min(used, self.k - 1)
        remaining = n - i - 1
        proper = self.variant == "lid"
        for c in range(top + 1):
            new_used = used + 1 if c == used else used
            if self.k - new_used > remaining:
                continue
            if proper and any(labels[u] == c for u in self.back_nbrs[i]):
                continue
            self.nodes += 1
            labels[v] = c
            added = self._settle(i)
            if added is not None:
                if self._extend(i + 1, new_used):
                    return True
                self._unsettle(i, added)
        labels[v] = -1
        return False

    def _settle(self, i: int) -> list[int] | None:
        """Record signatures completed at position i; None if a clash appears."""
        labels = self.labels
        class_of = self.class_of
        added_keys: list[int] = []
        finished: list[int] = []
        ok = True
        for u in self.completes[i]:
            s = 0
            for x in self.closed[u]:
                s |= 1 << labels[x]
            self.sig[u] = s
            if self.variant == "id":
                other = self.seen.get(s)
                if other is None:
                    self.seen[s] = class_of[u]
                    added_keys.append(s)
                elif other != class_of[u]:
                    ok = False
            else:
                for w in self.nbrs[u]:
                    if self.done[w] and self.sig[w] == s and class_of[w] != class_of[u]:
                        ok = False
                        break
            self.done[u] = True
            finished.append(u)
            if not ok:
                break
        if ok:
            return added_keys
        for s in added_keys:
            del self.seen[s]
        for u in finished:
            self.done[u] = False
        return None

    def _unsettle(self, i: int, added_keys: list[int]) -> None:
        for s in added_keys:
            del self.seen[s]
        for u in self.completes[i]:
            self.done[u] = False


def chi(g: Graph, variant: str, force: bool = False, limits: SearchLimits = DEFAULT_LIMITS) -> SolveReport:
    """Exact minimum palette size of an id, lid or rlid coloring of ``g``.

    The witness is the first optimal coloring in restricted-growth order
    (over the search vertex order), so it is deterministic.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    _guard(g.n, limits.max_coloring_n, force, "coloring")
    lb = lower_bound(g, variant)
    search = _ColoringSearch(g, variant)
    # n distinct colors is valid for every variant, so this loop terminates
    for k in range(lb, g.n + 1):
        labels = search.solve(k)
        if labels is not None:
            witness = Coloring.from_labels(labels)
            assert CHECKERS[variant](g, witness, first_only=True), "solver produced an invalid witness"
            proof = LOWER_BOUND_MATCH if k == lb else EXHAUSTIVE_BELOW
            return SolveReport(variant, k, witness, search.nodes, proof, lb)
    raise AssertionError("no valid coloring found with n colors")


def min_identifying_code(
    g: Graph, force: bool = False, dominating: bool = False, limits: SearchLimits = DEFAULT_LIMITS
) -> SolveReport:
    """Minimum twin-aware identifying code by subsets of increasing size.

    Subsets of one size are tried in lexicographic order, so the witness is
    the lexicographically smallest optimal code.
    """
    _guard(g.n, limits.max_code_n, force, "code")
    part = twin_partition(g)
    reps = [c[0] for c in part.classes]
    masks = [g.closed_masks[r] for r in reps]
    nodes = 0
    for size in range(g.n + 1):
        for code in combinations(range(g.n), size):
            nodes += 1
            cmask = 0
            for v in code:
                cmask |= 1 << v
            traces = {m & cmask for m in masks}
            if len(traces) < len(masks):
                continue
            if dominating and 0 in traces:
                continue
            witness = frozenset(code)
            assert is_identifying_code(g, witness, dominating=dominating)
            proof = LOWER_BOUND_MATCH if size == 0 else EXHAUSTIVE_BELOW
            return SolveReport("idcode", size, witness, nodes, proof, 0)
    # C = V always separates distinct closed neighborhoods and dominates
    raise AssertionError("no identifying code found")


def _weighted_lower_bound(num_classes: int) -> int:
    # non-twin vertices need distinct nonempty signature sets
    k = 1
    while (1 << k) - 1 < num_classes:
        k += 1
    return k


def weighted_optimum(
    g: Graph, weights, force: bool = False, limits: SearchLimits = DEFAULT_LIMITS
) -> SolveReport:
    """Fewest distinct colors in a weighted-identifying set coloring.

    Vertex v receives a nonempty color set of size at most ``weights[v]``.
    Color symmetry is broken by requiring the colors first introduced at a
    vertex to be the next unused ones.
    """
    weights = [int(w) for w in weights]
    if len(weights) != g.n or any(w < 1 for w in weights):
        raise ValueError("weights must give a positive capacity for every vertex")
    _guard(g.n, limits.max_weighted_n, force, "weighted")
    part = twin_partition(g)
    class_of = part.class_of
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    closed = [(v, *g.adjacency[v]) for v in range(g.n)]
    completes: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        completes[max(pos[u] for u in closed[v])].append(v)
    cap_after = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        cap_after[i] = cap_after[i + 1] + weights[order[i]]

    sets = [0] * g.n
    nodes = 0

    def choices(used: int, k: int, w: int):
        for new in range(0, min(w, k - used) + 1):
            fresh = ((1 << new) - 1) << used
            for size in range(max(1 - new, 0), min(w - new, used) + 1):
                for old in combinations(range(used), size):
                    m = fresh
                    for c in old:
                        m |= 1 << c
                    yield m, used + new

    def extend(i: int, used: int, k: int, seen: dict[int, int]) -> bool:
        nonlocal nodes
        if i == g.n:
            return used == k
        v = order[i]
        for m, new_used in choices(used, k, weights[v]):
            if k - new_used > cap_after[i + 1]:
                continue
            nodes += 1
            sets[v] = m
            added = []
            ok = True
            for u in completes[i]:
                s = 0
                for x in closed[u]:
                    s |= sets[x]
                other = seen.get(s)
                if other is None:
                    seen[s] = class_of[u]
                    added.append(s)
                elif other != class_of[u]:
                    ok = False
                    break
            if ok and extend(i + 1, new_used, k, seen):
                return True
            for s in added:
                del seen[s]
        sets[v] = 0
        return False

    lb = _weighted_lower_bound(len(part.classes))
    for k in range(lb, len(part.classes) + 1):
        if extend(0, 0, k, {}):
            witness = SetColoring(
                tuple(frozenset(c + 1 for c in range(k) if sets[v] >> c & 1) for v in range(g.n)),
                tuple(weights),
            )
            assert is_weighted_identifying(g, witness)
            proof = LOWER_BOUND_MATCH if k == lb else EXHAUSTIVE_BELOW
            return SolveReport("weighted", k, witness, nodes, proof, lb)
    raise AssertionError("one color per twin class is always valid")
