"""Coloring transfers between a graph and its twin quotient, and bound checks.

For a graph G with twin quotient Q, t twin classes of size >= 2 and largest
class size T:

    id, rlid:  chi(Q) - t <= chi(G) <= chi(Q)
    lid:       chi(Q) - t <= chi(G) <= chi(Q) + (T - 1) * t

The lift and extension functions build the colorings that witness each side.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .coloring import Coloring, ColoringError, check
from .graph import Graph
from .search import DEFAULT_LIMITS, InstanceTooLarge, SearchLimits, chi, min_identifying_code, weighted_optimum
from .twins import TwinPartition, quotient, twin_partition


@dataclass(frozen=True)
class BoundsReport:
    variant: str
    chi_G: int
    chi_Q: int
    t: int
    T_max: int
    lower: int
    upper: int

    @property
    def satisfied(self) -> bool:
        return self.lower <= self.chi_G <= self.upper

    @property
    def lower_tight(self) -> bool:
        return self.chi_G == self.lower

    @property
    def upper_tight(self) -> bool:
        return self.chi_G == self.upper

    def to_json(self) -> dict:
        out = asdict(self)
        out.update(satisfied=self.satisfied, lower_tight=self.lower_tight, upper_tight=self.upper_tight)
        return out


def _require(g: Graph, c, variant: str, what: str) -> None:
    res = check(g, c, variant)
    if not res:
        raise ColoringError(f"{what} is not a valid {variant} coloring: {res.violations[:3]}")


def _fresh(colors) -> int:
    return max(colors) + 1


def lift_identifying(q_coloring: Coloring, g: Graph, partition: TwinPartition | None = None) -> Coloring:
    """Give every vertex of G the color of its twin class in the quotient."""
    part = partition or twin_partition(g)
    q = quotient(g, part)
    _require(q.quotient, q_coloring, "id", "quotient coloring")
    return Coloring(tuple(q_coloring[q.projection[v]] for v in range(g.n)))


def lift_lid(q_coloring: Coloring, g: Graph, partition: TwinPartition | None = None) -> Coloring:
    """Representatives keep their class color, every other twin gets a new color."""
    part = partition or twin_partition(g)
    q = quotient(g, part)
    _require(q.quotient, q_coloring, "lid", "quotient coloring")
    colors = [0] * g.n
    nxt = _fresh(q_coloring.colors)
    for j, members in enumerate(part.classes):
        colors[members[0]] = q_coloring[j]
    for v in range(g.n):
        if colors[v] == 0:
            colors[v] = nxt
            nxt += 1
    return Coloring(tuple(colors))


def extend_to_quotient(
    g_coloring: Coloring, g: Graph, partition: TwinPartition | None = None, variant: str = "id"
) -> Coloring:
    """Color the quotient from a coloring of G.

    Singleton classes keep their color; each class of size >= 2 gets its own
    new color, allocated in order of representative.
    """
    part = partition or twin_partition(g)
    _require(g, g_coloring, variant, "input coloring")
    colors = []
    nxt = _fresh(g_coloring.colors)
    for members in part.classes:
        if len(members) == 1:
            colors.append(g_coloring[members[0]])
        else:
            colors.append(nxt)
            nxt += 1
    return Coloring(tuple(colors))


def verify_bounds(
    g: Graph, variant: str, force: bool = False, limits: SearchLimits = DEFAULT_LIMITS
) -> BoundsReport:
    part = twin_partition(g)
    q = quotient(g, part)
    chi_g = chi(g, variant, force=force, limits=limits).optimum
    chi_q = chi(q.quotient, variant, force=force, limits=limits).optimum
    upper = chi_q + (part.T_max - 1) * part.t if variant == "lid" else chi_q
    return BoundsReport(variant, chi_g, chi_q, part.t, part.T_max, chi_q - part.t, upper)


@dataclass(frozen=True)
class TransferCheck:
    name: str
    ok: bool
    palette: int
    budget: int


def constructive_checks(g: Graph, force: bool = False, limits: SearchLimits = DEFAULT_LIMITS) -> list[TransferCheck]:
    """Run every transfer on optimal colorings and test validity plus palette budget."""
    part = twin_partition(g)
    q = quotient(g, part)
    out = []

    cq = chi(q.quotient, "id", force=force, limits=limits).witness
    lifted = lift_identifying(cq, g, part)
    size = len(lifted.palette)
    out.append(TransferCheck("lift_identifying", bool(check(g, lifted, "id")) and size == len(cq.palette),
                             size, len(cq.palette)))

    cq = chi(q.quotient, "lid", force=force, limits=limits).witness
    lifted = lift_lid(cq, g, part)
    size, budget = len(lifted.palette), len(cq.palette) + (part.T_max - 1) * part.t
    out.append(TransferCheck("lift_lid", bool(check(g, lifted, "lid")) and size <= budget, size, budget))

    for variant in ("id", "lid", "rlid"):
        cg = chi(g, variant, force=force, limits=limits).witness
        ext = extend_to_quotient(cg, g, part, variant)
        size, budget = len(ext.palette), len(cg.palette) + part.t
        ok = bool(check(q.quotient, ext, variant)) and size <= budget
        out.append(TransferCheck(f"extend_to_quotient[{variant}]", ok, size, budget))
    return out


def verify_idcode_equality(g: Graph, force: bool = False, limits: SearchLimits = DEFAULT_LIMITS):
    """Return (equal, size on G, size on the quotient)."""
    size_g = min_identifying_code(g, force=force, limits=limits).optimum
    size_q = min_identifying_code(quotient(g).quotient, force=force, limits=limits).optimum
    return size_g == size_q, size_g, size_q


def quotient_weights(g: Graph, weights, partition: TwinPartition | None = None) -> list[int]:
    """w'(class) = w(representative) + class size - 1."""
    part = partition or twin_partition(g)
    return [weights[c[0]] + len(c) - 1 for c in part.classes]


def verify_weighted_equivalence(g: Graph, weights, max_n: int = 6, force: bool = False):
    """Return (equal, optimum on G, optimum on the quotient with adjusted weights)."""
    if g.n > max_n and not force:
        raise InstanceTooLarge(f"weighted equivalence is limited to n <= {max_n} (got n={g.n})")
    part = twin_partition(g)
    q = quotient(g, part)
    opt_g = weighted_optimum(g, weights, force=force).optimum
    opt_q = weighted_optimum(q.quotient, quotient_weights(g, weights, part), force=force).optimum
    return opt_g == opt_q, opt_g, opt_q
