"""Crowell's weighted spanning-tree model for alternating knots.

The Crowell graph of an alternating knot diagram K has one vertex per
crossing and one directed edge per arc, oriented from the crossing the arc
passes over to the crossing it passes under.  Each crossing sends out the
two arcs of its over-strand, one weighted t and the other t^2, and the sum
of tree weights over rooted spanning trees computes the Alexander
polynomial of K at -t, for any choice of root.

The same diagram also projects to a singular knot: forget over/under data
and read every crossing as a transverse 4-valent vertex with trivial
coloring.  Comparing the two polynomials on one diagram is the point of the
compare report.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from .laurent import HalfPoly
from .plane_graph import HEAD, TAIL, Edge, GraphFormatError, PlaneGraph

# slots of a crossing tuple (a, b, c, d), counter-clockwise from the
# incoming under-strand
UNDER_IN, UNDER_OUT = 0, 2


class PDFormatError(GraphFormatError):
    pass


@dataclass(frozen=True)
class PDCode:
    """An oriented knot diagram in planar-diagram notation.

    crossings[i] is the 4-tuple of arc labels around crossing i+1 in
    counter-clockwise order starting at the incoming under-strand.
    over_in[i] is 1 or 3: the slot where the over-strand enters.
    """

    crossings: Tuple[Tuple[int, int, int, int], ...]
    over_in: Tuple[int, ...]

    def vertex_ids(self) -> List[int]:
        return list(range(1, len(self.crossings) + 1))

    def entry_slots(self, i: int) -> Tuple[int, int]:
        return (UNDER_IN, self.over_in[i])

    def exit_slots(self, i: int) -> Tuple[int, int]:
        return (UNDER_OUT, 4 - self.over_in[i])

    def arc_ends(self) -> Dict[int, Dict[str, Tuple[int, int]]]:
        """arc label -> {"in": (crossing, slot), "out": (crossing, slot)}.

        "out" is the end where the arc leaves a crossing, "in" where it
        enters one; every arc must have exactly one of each.
        """
        ends: Dict[int, Dict[str, Tuple[int, int]]] = {}
        for i, quad in enumerate(self.crossings):
            entries = self.entry_slots(i)
            for slot, arc in enumerate(quad):
                kind = "in" if slot in entries else "out"
                spot = ends.setdefault(arc, {})
                if kind in spot:
                    raise PDFormatError(
                        f"arc {arc} has two {kind}-ends; orientation is inconsistent"
                    )
                spot[kind] = (i + 1, slot)
        for arc, spot in ends.items():
            if set(spot) != {"in", "out"}:
                raise PDFormatError(f"arc {arc} does not appear exactly twice")
        return ends


def parse_pd(text: str) -> PDCode:
    """Parse the PD file grammar: `X a b c d` lines plus one `orient` line.

    The orient line lists one `x->y` pair per crossing giving the direction
    of its over-strand; see docs/pd-format for the full grammar.
    """
    quads: List[Tuple[int, int, int, int]] = []
    over_pairs: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "X":
            if len(parts) != 5:
                raise PDFormatError(f"line {lineno}: expected `X a b c d`")
            try:
                quads.append(tuple(int(p) for p in parts[1:]))  # type: ignore[arg-type]
            except ValueError as exc:
                raise PDFormatError(f"line {lineno}: {exc}") from exc
        elif parts[0] == "orient":
            for token in parts[1:]:
                x, arrow, y = token.partition("->")
                if arrow != "->":
                    raise PDFormatError(f"line {lineno}: bad orient token {token!r}")
                try:
                    over_pairs.append((int(x), int(y)))
                except ValueError as exc:
                    raise PDFormatError(f"line {lineno}: {exc}") from exc
        else:
            raise PDFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if not quads:
        raise PDFormatError("no crossings")
    if len(over_pairs) != len(quads):
        raise PDFormatError(
            f"orient must give one pair per crossing: {len(over_pairs)} != {len(quads)}"
        )

    # match each orient pair to the crossing carrying that over-strand
    over_in: List[Optional[int]] = [None] * len(quads)
    for x, y in over_pairs:
        hit = None
        for i, quad in enumerate(quads):
            if over_in[i] is None and {quad[1], quad[3]} == {x, y}:
                hit = i
                break
        if hit is None:
            raise PDFormatError(f"orient pair {x}->{y} matches no unused over-strand")
        over_in[hit] = 1 if quads[hit][1] == x else 3
    pd = PDCode(tuple(quads), tuple(over_in))  # type: ignore[arg-type]
    _check_closed(pd)
    return pd


def load_pd(path: str) -> PDCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pd(fh.read())


def _check_closed(pd: PDCode) -> None:
    """One knot component: the arc successions form a single cycle."""
    ends = pd.arc_ends()
    arcs = sorted(ends)
    if len(arcs) != 2 * len(pd.crossings):
        raise PDFormatError(
            f"{len(arcs)} arcs for {len(pd.crossings)} crossings; knot needs 2n"
        )
    # successor of arc z: the arc leaving the crossing z enters, on the same
    # strand (under stays under, over stays over)
    succ: Dict[int, int] = {}
    for z in arcs:
        crossing, slot = ends[z]["in"]
        quad = pd.crossings[crossing - 1]
        out_slot = UNDER_OUT if slot == UNDER_IN else 4 - slot
        succ[z] = quad[out_slot]
    seen = {arcs[0]}
    z = succ[arcs[0]]
    while z not in seen:
        seen.add(z)
        z = succ[z]
    if len(seen) != len(arcs):
        raise PDFormatError(
            f"diagram has {len(arcs) - len(seen)} arcs off the main component"
        )


def singular_from_pd(pd: PDCode) -> PlaneGraph:
    """The singular projection: crossings become 4-valent MOY vertices.

    Orientations come from the diagram, all colors are 1, the rotation at a
    crossing is its PD tuple.  The base edge is the lowest arc label and the
    outer region is taken on its left.
    """
    ends = pd.arc_ends()
    edges = [Edge(z, spot["out"][0], spot["in"][0], 1) for z, spot in ends.items()]
    rotations: Dict[int, List[Tuple[int, str]]] = {}
    for i, quad in enumerate(pd.crossings):
        entries = pd.entry_slots(i)
        rotations[i + 1] = [
            (arc, HEAD if slot in entries else TAIL) for slot, arc in enumerate(quad)
        ]
    base = min(ends)
    g = PlaneGraph(rotations, edges, base, (base, "left"))
    report = g.validate()
    if not report.ok:
        raise PDFormatError(f"diagram is not a transverse plane projection: {report}")
    return g


@dataclass(frozen=True)
class CrowellGraph:
    """Directed weighted graph on the crossings of an alternating diagram.

    tails/heads/weights are indexed by arc label; weights[z] is the
    exponent, so the edge weight is t**weights[z].
    """

    vertices: Tuple[int, ...]
    tails: Dict[int, int]
    heads: Dict[int, int]
    weights: Dict[int, int]

    def edge_ids(self) -> List[int]:
        return sorted(self.tails)


def crowell_graph(pd: PDCode) -> CrowellGraph:
    """Build the Crowell graph, rejecting non-alternating diagrams.

    Alternation means every arc is the over-strand at one end and the
    under-strand at the other; the arc then becomes a directed edge from
    its over crossing to its under crossing.  Weights are set where the
    edge arrives: of the two under-strand arcs at a crossing, the one to
    the right of the over-strand direction carries t^2, the one on the
    left t.  In slot terms, with the over-strand exiting at slot s, the
    right side is slot s-1 mod 4.
    """
    ends = pd.arc_ends()
    tails: Dict[int, int] = {}
    heads: Dict[int, int] = {}
    weights: Dict[int, int] = {}
    for z, spot in sorted(ends.items()):
        slots = {spot["in"][1], spot["out"][1]}
        over = slots - {UNDER_IN, UNDER_OUT}
        if len(over) != 1:
            kind = "over" if not (slots & {UNDER_IN, UNDER_OUT}) else "under"
            raise PDFormatError(
                f"not alternating: arc {z} passes {kind} at both crossings "
                f"{spot['out'][0]} and {spot['in'][0]}"
            )
        over_slot = over.pop()
        if over_slot == spot["out"][1]:
            over_crossing, (under_crossing, under_slot) = spot["out"][0], spot["in"]
        else:
            over_crossing, (under_crossing, under_slot) = spot["in"][0], spot["out"]
        tails[z] = over_crossing
        heads[z] = under_crossing
        out_slot = 4 - pd.over_in[under_crossing - 1]
        weights[z] = 2 if under_slot == (out_slot - 1) % 4 else 1
    for i in pd.vertex_ids():
        incoming = sorted(weights[z] for z in weights if heads[z] == i)
        assert incoming == [1, 2], f"crossing {i} receives weights {incoming}"
    return CrowellGraph(tuple(pd.vertex_ids()), tails, heads, weights)


def crowell_trees(
    cg: CrowellGraph, root: Optional[int] = None
) -> List[Tuple[Tuple[int, ...], HalfPoly]]:
    """Rooted spanning trees of the Crowell graph with their weights.

    A tree picks one incoming edge at each non-root vertex so that every
    vertex reaches the root; its weight is the product of edge weights.
    In-degrees are 2, so brute force over the 2^(n-1) choices is fine at
    the sizes alternating-knot fixtures have.
    """
    if root is None:
        root = min(cg.vertices)
    if root not in cg.vertices:
        raise ValueError(f"no crossing {root}")
    others = [v for v in cg.vertices if v != root]
    in_edges = {v: sorted(z for z in cg.heads if cg.heads[z] == v) for v in others}
    out: List[Tuple[Tuple[int, ...], HalfPoly]] = []
    for choice in product(*(in_edges[v] for v in others)):
        # connected to the root <=> no directed cycle among the choices
        parent = dict(zip(others, choice))
        ok = True
        for start in others:
            v, steps = start, 0
            while v != root:
                v = cg.tails[parent[v]]
                steps += 1
                if steps > len(others):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            w = sum(cg.weights[z] for z in choice)
            out.append((tuple(sorted(choice)), HalfPoly.monomial(2 * w)))
    return out


def crowell_alexander(cg: CrowellGraph, root: Optional[int] = None) -> HalfPoly:
    """Sum of tree weights, canonicalized: the Alexander polynomial at -t."""
    total = HalfPoly.zero()
    for _, w in crowell_trees(cg, root):
        total = total + w
    if total.is_zero():
        raise ValueError("Crowell graph has no rooted spanning tree")
    return total.canonicalize()


@dataclass(frozen=True)
class CompareReport:
    crowell_poly: HalfPoly
    singular_poly: HalfPoly
    equal: bool
    crowell_tree_count: int
    singular_tree_count: int


def compare(pd: PDCode) -> CompareReport:
    """Crowell's polynomial of K against the MOY polynomial of its
    singularization, on the same diagram."""
    from .spanning import TreeSpace, alexander_spanning

    cg = crowell_graph(pd)
    crowell_poly = crowell_alexander(cg)
    n_crowell = len(crowell_trees(cg))
    g = singular_from_pd(pd)
    singular_poly = alexander_spanning(g)
    n_singular = len(TreeSpace(g).enumerate_trees())
    return CompareReport(
        crowell_poly=crowell_poly,
        singular_poly=singular_poly,
        equal=crowell_poly.doteq(singular_poly),
        crowell_tree_count=n_crowell,
        singular_tree_count=n_singular,
    )
