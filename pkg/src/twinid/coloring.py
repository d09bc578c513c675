"""Colorings and the validity predicates for the identification variants.

Every predicate ignores twin pairs: two vertices with the same closed
neighborhood can never be told apart, so only non-twin pairs are checked.
Predicates return a :class:`CheckResult` that is truthy iff the object is
valid and carries an exhaustive list of violations (unless ``first_only``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph

IMPROPER = "improper-edge"
UNIDENTIFIED = "unidentified-pair"
UNDOMINATED = "undominated-vertex"
CAPACITY = "capacity"

VARIANTS = ("id", "lid", "rlid")


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        bad = [v for v, c in enumerate(self.colors) if c < 1]
        if bad:
            raise ColoringError(f"colors must be positive integers (vertex {bad[0]})")

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.colors)

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Coloring":
        """Build from 0-based block labels (e.g. a restricted growth string)."""
        return cls(tuple(x + 1 for x in labels))


@dataclass(frozen=True)
class SetColoring:
    colors_of: tuple[frozenset[int], ...]
    capacity: tuple[int, ...]

    @property
    def palette(self) -> frozenset[int]:
        return frozenset().union(*self.colors_of)


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass
class CheckResult:
    valid: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


def _colors(c) -> Sequence[int]:
    return c.colors if isinstance(c, Coloring) else c


def _check_total(g: Graph, colors: Sequence) -> None:
    if len(colors) != g.n:
        raise ColoringError(f"coloring covers {len(colors)} vertices, graph has {g.n}")


def signature(g: Graph, c, v: int) -> frozenset[int]:
    """The set of colors on the closed neighborhood of ``v``."""
    g._check_vertex(v)
    colors = _colors(c)
    return frozenset(colors[u] for u in g.adjacency[v]) | {colors[v]}


def _signatures(g: Graph, colors: Sequence[int]) -> list[frozenset[int]]:
    return [signature(g, colors, v) for v in range(g.n)]


def is_identifying(g: Graph, c, first_only: bool = False) -> CheckResult:
    colors = _colors(c)
    _check_total(g, colors)
    sigs = _signatures(g, colors)
    masks = g.closed_masks
    by_sig: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        by_sig.setdefault(sigs[v], []).append(v)
    violations = []
    for group in by_sig.values():
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                if masks[u] != masks[v]:
                    violations.append(Violation(UNIDENTIFIED, (u, v)))
                    if first_only:
                        return CheckResult(False, violations)
    violations.sort(key=lambda x: x.vertices)
    return CheckResult(not violations, violations)


def _check_local(g: Graph, colors: Sequence[int], proper: bool, first_only: bool) -> CheckResult:
    _check_total(g, colors)
    sigs = _signatures(g, colors)
    masks = g.closed_masks
    violations = []
    for u, v in g.edges:
        if proper and colors[u] == colors[v]:
            violations.append(Violation(IMPROPER, (u, v)))
        if masks[u] != masks[v] and sigs[u] == sigs[v]:
            violations.append(Violation(UNIDENTIFIED, (u, v)))
        if first_only and violations:
            break
    return CheckResult(not violations, violations)


def is_rlid(g: Graph, c, first_only: bool = False) -> CheckResult:
    """Adjacent non-twin pairs must be identified; properness is not required."""
    return _check_local(g, _colors(c), proper=False, first_only=first_only)


def is_lid(g: Graph, c, first_only: bool = False) -> CheckResult:
    return _check_local(g, _colors(c), proper=True, first_only=first_only)


CHECKERS = {"id": is_identifying, "lid": is_lid, "rlid": is_rlid}


def check(g: Graph, c, variant: str, first_only: bool = False) -> CheckResult:
    try:
        checker = CHECKERS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}") from None
    return checker(g, c, first_only=first_only)


def is_identifying_code(g: Graph, code: Iterable[int], dominating: bool = False) -> CheckResult:
    """Check that N[u] & C differs from N[v] & C for every non-twin pair.

    With ``dominating=True`` the classical extra condition N[u] & C != {} is
    also enforced for every vertex.
    """
    cmask = 0
    for v in code:
        g._check_vertex(v)
        cmask |= 1 << v
    masks = g.closed_masks
    traces = [m & cmask for m in masks]
    violations = []
    if dominating:
        violations.extend(Violation(UNDOMINATED, (v,)) for v in range(g.n) if not traces[v])
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if masks[u] != masks[v] and traces[u] == traces[v]:
                violations.append(Violation(UNIDENTIFIED, (u, v)))
    return CheckResult(not violations, violations)


def is_weighted_identifying(g: Graph, sc: SetColoring) -> CheckResult:
    if len(sc.colors_of) != g.n or len(sc.capacity) != g.n:
        raise ColoringError("set coloring and capacities must cover every vertex")
    violations = [
        Violation(CAPACITY, (v,))
        for v, (cs, w) in enumerate(zip(sc.colors_of, sc.capacity))
        if not 1 <= len(cs) <= w
    ]
    if violations:
        return CheckResult(False, violations)
    sigs = [
        frozenset().union(sc.colors_of[v], *(sc.colors_of[u] for u in g.adjacency[v]))
        for v in range(g.n)
    ]
    masks = g.closed_masks
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if masks[u] != masks[v] and sigs[u] == sigs[v]:
                violations.append(Violation(UNIDENTIFIED, (u, v)))
    return CheckResult(not violations, violations)


# --- file formats -----------------------------------------------------------


def _pairs(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ColoringError(f"line {lineno}: expected 'v value', got {line!r}")
        try:
            yield lineno, int(parts[0]), parts[1]
        except ValueError:
            raise ColoringError(f"line {lineno}: bad vertex index {parts[0]!r}") from None


def _collect(text: str, n: int, convert) -> list:
    values: list = [None] * n
    for lineno, v, raw in _pairs(text):
        if not 0 <= v < n:
            raise ColoringError(f"line {lineno}: vertex {v} out of range for n={n}")
        if values[v] is not None:
            raise ColoringError(f"line {lineno}: vertex {v} assigned twice")
        try:
            values[v] = convert(raw)
        except ValueError:
            raise ColoringError(f"line {lineno}: bad value {raw!r}") from None
    missing = [v for v, x in enumerate(values) if x is None]
    if missing:
        raise ColoringError(f"no value for vertex {missing[0]}")
    return values


def parse_coloring(text: str, n: int) -> Coloring:
    return Coloring(tuple(_collect(text, n, int)))


def write_coloring(c: Coloring) -> str:
    return "\n".join(f"{v} {x}" for v, x in enumerate(c.colors))


def parse_weights(text: str, n: int) -> list[int]:
    weights = _collect(text, n, int)
    if any(w < 1 for w in weights):
        raise ColoringError("weights must be positive")
    return weights


def parse_set_coloring(text: str, n: int, capacity: Sequence[int]) -> SetColoring:
    sets = _collect(text, n, lambda raw: frozenset(int(x) for x in raw.split(",")))
    return SetColoring(tuple(sets), tuple(capacity))


def write_set_coloring(sc: SetColoring) -> str:
    return "\n".join(f"{v} {','.join(map(str, sorted(cs)))}" for v, cs in enumerate(sc.colors_of))


def parse_code(text: str, n: int) -> frozenset[int]:
    code = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise ColoringError(f"line {lineno}: bad vertex index {line!r}") from None
        if not 0 <= v < n:
            raise ColoringError(f"line {lineno}: vertex {v} out of range for n={n}")
        code.add(v)
    return frozenset(code)


def write_code(code: Iterable[int]) -> str:
    return "\n".join(str(v) for v in sorted(code))

