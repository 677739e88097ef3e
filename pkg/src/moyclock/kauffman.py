"""Kauffman states of decorated plane graphs and the state-sum polynomial.

A decorated diagram is obtained by drawing a circle around every vertex and
marking a base point on the base edge.  Each edge meets the circle of its
head in one crossing.  Regions are the faces of the graph plus one circle
region per vertex.  Every crossing has three corners: north (inside the
head's circle), west (in the face on the left of the edge), east (on the
right).  A state sends each crossing to one of its corners so that the
induced map onto the unmarked regions is a bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .laurent import HalfPoly, quantum_integer
from .plane_graph import PlaneGraph

# region keys: ("f", face_id) for a regular region, ("c", vertex_id) for a
# circle region
Region = Tuple[str, int]

N, E, W = "N", "E", "W"
CORNER_ORDER = (N, E, W)


@dataclass(frozen=True)
class DecoratedDiagram:
    graph: PlaneGraph
    regions: Tuple[Region, ...]
    corner_map: Dict[int, Dict[str, Region]]  # crossing (= edge id) -> corners
    marked: Tuple[Region, Region]  # R_u, R_v


@dataclass(frozen=True)
class KauffmanState:
    corners: Tuple[Tuple[int, str], ...]  # (crossing, N|E|W), sorted by crossing

    def corner(self, crossing: int) -> str:
        for c, k in self.corners:
            if c == crossing:
                return k
        raise KeyError(crossing)

    def as_dict(self) -> Dict[int, str]:
        return dict(self.corners)


def build_decorated(g: PlaneGraph) -> DecoratedDiagram:
    g.faces()
    regions: List[Region] = [("f", f.id) for f in g.faces()]
    regions += [("c", v) for v in g.vertex_ids()]
    corner_map: Dict[int, Dict[str, Region]] = {}
    for e in g.edges.values():
        corner_map[e.id] = {
            N: ("c", e.head),
            E: ("f", g.right_face(e.id)),
            W: ("f", g.left_face(e.id)),
        }
    marked = (
        ("f", g.left_face(g.base_edge)),
        ("f", g.right_face(g.base_edge)),
    )
    if marked[0] == marked[1]:
        raise ValueError("base point is not adjacent to two distinct regions")
    if len(regions) != len(corner_map) + 2:
        raise AssertionError(
            f"region/crossing count mismatch: {len(regions)} != {len(corner_map)} + 2"
        )
    return DecoratedDiagram(g, tuple(regions), corner_map, marked)


def enumerate_states(d: DecoratedDiagram) -> List[KauffmanState]:
    """All Kauffman states, sorted lexicographically by (crossing, N < E < W)."""
    base = d.graph.base_edge
    marked = set(d.marked)
    used = {d.corner_map[base][N]}
    assignment: Dict[int, str] = {base: N}

    # available corners per unassigned crossing; the marked crossing is
    # forced to N up front since both its E and W regions are marked
    options: Dict[int, List[str]] = {}
    for c, corners in d.corner_map.items():
        if c == base:
            continue
        options[c] = [k for k in CORNER_ORDER if corners[k] not in marked]

    out: List[KauffmanState] = []

    def search(todo: List[int]) -> None:
        if not todo:
            out.append(KauffmanState(tuple(sorted(assignment.items()))))
            return
        # fail-fast: branch on the crossing with the fewest live corners
        best_pos = min(
            range(len(todo)),
            key=lambda i: sum(
                1 for k in options[todo[i]] if d.corner_map[todo[i]][k] not in used
            ),
        )
        todo = todo[:best_pos] + todo[best_pos + 1 :] + [todo[best_pos]]
        c = todo.pop()
        for k in options[c]:
            r = d.corner_map[c][k]
            if r in used:
                continue
            used.add(r)
            assignment[c] = k
            search(todo)
            del assignment[c]
            used.discard(r)

    search(sorted(options))
    corner_rank = {k: i for i, k in enumerate(CORNER_ORDER)}
    out.sort(key=lambda s: [(c, corner_rank[k]) for c, k in s.corners])
    return out


def state_monomial(d: DecoratedDiagram, s: KauffmanState) -> HalfPoly:
    p = HalfPoly.one()
    base = d.graph.base_edge
    for c, k in s.corners:
        i = d.graph.edges[c].color
        if c == base:
            assert k == N
            p = p * HalfPoly.monomial(i)
        elif k == N:
            p = p * quantum_integer(i)
        elif k == E:
            p = p * HalfPoly.monomial(i)
        else:
            p = p * HalfPoly.monomial(-i)
    return p


def state_sum(d: DecoratedDiagram) -> HalfPoly:
    total = HalfPoly.zero()
    for s in enumerate_states(d):
        total = total + state_monomial(d, s)
    if total.is_zero():
        return total  # "no states" sentinel; caller decides how to report
    return total.canonicalize()


def alexander_statesum(g: PlaneGraph) -> HalfPoly:
    return state_sum(build_decorated(g))
