"""Plane directed multigraphs with balanced colorings.

The embedding is a rotation system: every vertex stores the counter-clockwise
cyclic order of its incident half-edges.  Faces are traced combinatorially;
the unbounded face is designated explicitly via a corner (edge, side).

Darts: each edge contributes a forward dart (tail -> head) and a backward
dart.  Tracing the orbit of "reverse, then take the next dart in rotation
order at the new origin" yields the face lying on the *left* of each dart.
The left side of an edge is the face of its forward dart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

HalfEdge = Tuple[int, str]  # (edge id, "head" | "tail")
Dart = Tuple[int, bool]  # (edge id, forward?)

HEAD = "head"
TAIL = "tail"


class GraphFormatError(ValueError):
    """Structurally malformed input (unresolved references, bad schema)."""


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    color: int


@dataclass(frozen=True)
class Face:
    id: int
    darts: Tuple[Dart, ...]  # boundary corners, face on the right of each dart

    def sides(self) -> List[Tuple[int, str]]:
        """Boundary as (edge id, 'left'|'right') pairs."""
        return [(e, "right" if fwd else "left") for e, fwd in self.darts]


@dataclass(frozen=True)
class DualGraph:
    """One vertex per face; one dual edge per primal edge.

    For primal edge e, the dual edge joins left_face(e) -> right_face(e);
    which primal side each dual endpoint lies on is recorded implicitly by
    that orientation.
    """

    face_count: int
    root: int  # dual vertex of the outer face
    left_face: Dict[int, int]  # primal edge id -> face id on its left
    right_face: Dict[int, int]

    def endpoints(self, edge_id: int) -> Tuple[int, int]:
        return (self.left_face[edge_id], self.right_face[edge_id])


@dataclass
class ValidationReport:
    checks: List[Tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> List[Tuple[str, str]]:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def __str__(self) -> str:
        lines = []
        for name, ok, detail in self.checks:
            line = f"{'PASS' if ok else 'FAIL'}  {name}"
            if detail and not ok:
                line += f"  ({detail})"
            lines.append(line)
        return "\n".join(lines)


class PlaneGraph:
    """Immutable plane multigraph with rotation system and base edge."""

    def __init__(
        self,
        rotations: Dict[int, Sequence[HalfEdge]],
        edges: Sequence[Edge],
        base_edge: int,
        outer_corner: Tuple[int, str],
    ):
        self.rotations: Dict[int, Tuple[HalfEdge, ...]] = {
            v: tuple(hs) for v, hs in rotations.items()
        }
        self.edges: Dict[int, Edge] = {e.id: e for e in edges}
        if len(self.edges) != len(edges):
            raise GraphFormatError("duplicate edge ids")
        self.base_edge = base_edge
        self.outer_corner = outer_corner  # (edge id, "left"|"right")
        self._check_structure()
        self._faces: Optional[List[Face]] = None
        self._face_of_dart: Dict[Dart, int] = {}
        self._outer_face: Optional[int] = None

    # -- structural checks (hard errors, not validation verdicts) -------

    def _check_structure(self) -> None:
        seen: Dict[HalfEdge, int] = {}
        for v, rot in self.rotations.items():
            for h in rot:
                eid, end = h
                if eid not in self.edges:
                    raise GraphFormatError(f"rotation at vertex {v} names unknown edge {eid}")
                if end not in (HEAD, TAIL):
                    raise GraphFormatError(f"bad half-edge end {end!r}")
                if h in seen:
                    raise GraphFormatError(f"half-edge {h} appears twice")
                want = self.edges[eid].head if end == HEAD else self.edges[eid].tail
                if want != v:
                    raise GraphFormatError(
                        f"half-edge {h} listed at vertex {v} but edge says {want}"
                    )
                seen[h] = v
        for e in self.edges.values():
            for end in (HEAD, TAIL):
                if (e.id, end) not in seen:
                    raise GraphFormatError(f"edge {e.id} missing its {end} half-edge")
            if e.tail not in self.rotations or e.head not in self.rotations:
                raise GraphFormatError(f"edge {e.id} references unknown vertex")
        if self.base_edge not in self.edges:
            raise GraphFormatError(f"base edge {self.base_edge} does not exist")
        oc_edge, oc_side = self.outer_corner
        if oc_edge not in self.edges or oc_side not in ("left", "right"):
            raise GraphFormatError(f"bad outer face corner {self.outer_corner}")

    # -- darts ----------------------------------------------------------

    def dart_origin(self, d: Dart) -> int:
        e = self.edges[d[0]]
        return e.tail if d[1] else e.head

    def dart_target(self, d: Dart) -> int:
        e = self.edges[d[0]]
        return e.head if d[1] else e.tail

    @staticmethod
    def dart_half(d: Dart) -> HalfEdge:
        """The half-edge at the dart's origin."""
        return (d[0], TAIL if d[1] else HEAD)

    @staticmethod
    def half_dart(h: HalfEdge) -> Dart:
        """The dart whose origin carries this half-edge."""
        return (h[0], h[1] == TAIL)

    def next_dart(self, d: Dart) -> Dart:
        """Next dart counter-clockwise around the origin of d."""
        v = self.dart_origin(d)
        rot = self.rotations[v]
        i = rot.index(self.dart_half(d))
        return self.half_dart(rot[(i + 1) % len(rot)])

    # -- faces ------------------------------------------------------------

    def faces(self) -> List[Face]:
        """All faces, traced from the rotation system.

        Face ids are assigned by the lowest dart key contained, so output is
        reproducible.
        """
        if self._faces is not None:
            return self._faces
        darts = [(e, fwd) for e in sorted(self.edges) for fwd in (True, False)]
        unvisited = set(darts)
        orbits: List[List[Dart]] = []
        for d0 in darts:
            if d0 not in unvisited:
                continue
            orbit = []
            d = d0
            while True:
                orbit.append(d)
                unvisited.discard(d)
                d = self.next_dart((d[0], not d[1]))  # reverse, then rotate
                if d == d0:
                    break
            orbits.append(orbit)

        def key(orbit: List[Dart]) -> Tuple[int, int]:
            return min((e, 0 if fwd else 1) for e, fwd in orbit)

        orbits.sort(key=key)
        self._faces = [Face(i, tuple(orb)) for i, orb in enumerate(orbits)]
        for f in self._faces:
            for d in f.darts:
                self._face_of_dart[d] = f.id
        oc_edge, oc_side = self.outer_corner
        self._outer_face = self._face_of_dart[(oc_edge, oc_side == "right")]
        return self._faces

    @property
    def outer_face(self) -> int:
        self.faces()
        assert self._outer_face is not None
        return self._outer_face

    def left_face(self, edge_id: int) -> int:
        """Face on the left when walking the edge from tail to head.

        Face orbits traced from counter-clockwise rotations keep the face on
        the right of each dart, so the left face of an edge is the face of
        its backward dart.
        """
        self.faces()
        return self._face_of_dart[(edge_id, False)]

    def right_face(self, edge_id: int) -> int:
        self.faces()
        return self._face_of_dart[(edge_id, True)]

    def dual(self) -> DualGraph:
        faces = self.faces()
        return DualGraph(
            face_count=len(faces),
            root=self.outer_face,
            left_face={e: self.left_face(e) for e in self.edges},
            right_face={e: self.right_face(e) for e in self.edges},
        )

    # -- basic graph queries ----------------------------------------------

    def vertex_ids(self) -> List[int]:
        return sorted(self.rotations)

    def in_edges(self, v: int) -> List[int]:
        return [eid for eid, end in self.rotations[v] if end == HEAD]

    def out_edges(self, v: int) -> List[int]:
        return [eid for eid, end in self.rotations[v] if end == TAIL]

    def incoming_order(self, v: int) -> List[int]:
        """Incoming edges at v, counter-clockwise from the leftmost.

        The leftmost incoming half-edge is the one immediately following the
        outgoing arc in counter-clockwise rotation.  Requires transversality.
        """
        rot = self.rotations[v]
        n = len(rot)
        ins = [i for i, (_, end) in enumerate(rot) if end == HEAD]
        if not ins:
            return []
        if len(ins) == n:
            raise ValueError(f"vertex {v} has no outgoing edge")
        start = next(
            i for i in ins if rot[(i - 1) % n][1] == TAIL
        )
        order = []
        i = start
        while rot[i][1] == HEAD:
            order.append(rot[i][0])
            i = (i + 1) % n
        if len(order) != len(ins):
            raise ValueError(f"vertex {v} is not transverse")
        return order

    def is_connected(self) -> bool:
        verts = self.vertex_ids()
        if not verts:
            return False
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for eid, _ in self.rotations[v]:
                e = self.edges[eid]
                for w in (e.tail, e.head):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(seen) == len(verts)

    # -- validation ---------------------------------------------------------

    def validate(self) -> ValidationReport:
        rep = ValidationReport()
        rep.add("connected", self.is_connected())

        bad_color = next((e.id for e in self.edges.values() if e.color < 1), None)
        rep.add(
            "positive colors",
            bad_color is None,
            f"edge {bad_color}" if bad_color is not None else "",
        )

        bad_balance = None
        for v in self.vertex_ids():
            in_sum = sum(self.edges[e].color for e in self.in_edges(v))
            out_sum = sum(self.edges[e].color for e in self.out_edges(v))
            if in_sum != out_sum:
                bad_balance = v
                break
        rep.add(
            "balanced coloring",
            bad_balance is None,
            f"vertex {bad_balance}" if bad_balance is not None else "",
        )

        bad_deg = next(
            (
                v
                for v in self.vertex_ids()
                if not self.in_edges(v) or not self.out_edges(v)
            ),
            None,
        )
        rep.add(
            "every vertex has in- and out-edges",
            bad_deg is None,
            f"vertex {bad_deg}" if bad_deg is not None else "",
        )

        bad_trans = None
        for v in self.vertex_ids():
            rot = self.rotations[v]
            # incoming half-edges must form one contiguous cyclic arc
            flips = sum(
                1
                for i in range(len(rot))
                if rot[i][1] != rot[(i + 1) % len(rot)][1]
            )
            if flips > 2:
                bad_trans = v
                break
        rep.add(
            "transverse orientation",
            bad_trans is None,
            f"vertex {bad_trans}" if bad_trans is not None else "",
        )

        v_n = len(self.rotations)
        e_n = len(self.edges)
        f_n = len(self.faces())
        rep.add(
            "genus zero",
            v_n - e_n + f_n == 2,
            f"V-E+F = {v_n - e_n + f_n}",
        )

        loop_bad = None
        for e in self.edges.values():
            if e.tail == e.head:
                # a self-loop must bound a face (its two darts are not enough:
                # one of its sides must be a face consisting of just the loop)
                if not any(
                    len(f.darts) == 1 and f.darts[0][0] == e.id for f in self.faces()
                ):
                    loop_bad = e.id
                    break
        rep.add(
            "self-loops bound faces",
            loop_bad is None,
            f"edge {loop_bad}" if loop_bad is not None else "",
        )

        rep.add(
            "base edge has two distinct sides",
            self.left_face(self.base_edge) != self.right_face(self.base_edge),
        )
        return rep

    def base_on_outer_face(self) -> bool:
        return self.outer_face in (
            self.left_face(self.base_edge),
            self.right_face(self.base_edge),
        )

    # -- derived graphs ------------------------------------------------------

    def with_base_edge(self, edge_id: int) -> "PlaneGraph":
        """Same graph, different base edge (outer face corner unchanged)."""
        return PlaneGraph(self.rotations, list(self.edges.values()), edge_id, self.outer_corner)

    def parallel_replace(self, edge_id: int) -> "PlaneGraph":
        """Replace an edge of color n by n parallel color-1 edges.

        The new edges occupy the old edge's rotation slot at both endpoints
        and bound n-1 empty digon faces between consecutive copies.  If the
        replaced edge was the base edge, the base moves to the copy that
        comes first in counter-clockwise order at the head.
        """
        if edge_id not in self.edges:
            raise GraphFormatError(f"no edge {edge_id}")
        old = self.edges[edge_id]
        n = old.color
        if n == 1:
            return self
        next_id = max(self.edges) + 1
        new_ids = [edge_id] + [next_id + i for i in range(n - 1)]
        new_edges = [e for e in self.edges.values() if e.id != edge_id]
        new_edges += [Edge(i, old.tail, old.head, 1) for i in new_ids]

        # At the head, insert the copies in rotation order new_ids[0..n-1];
        # at the tail, reversed, so copy i and copy i+1 bound a digon.
        rotations: Dict[int, List[HalfEdge]] = {}
        for v, rot in self.rotations.items():
            out: List[HalfEdge] = []
            for h in rot:
                if h == (edge_id, HEAD):
                    out.extend((i, HEAD) for i in new_ids)
                elif h == (edge_id, TAIL):
                    out.extend((i, TAIL) for i in reversed(new_ids))
                else:
                    out.append(h)
            rotations[v] = out

        base = self.base_edge
        if base == edge_id:
            base = new_ids[0]
        oc_edge, oc_side = self.outer_corner
        if oc_edge == edge_id:
            # the extreme copies inherit the old edge's two sides
            oc_edge = new_ids[0] if oc_side == "left" else new_ids[-1]
        return PlaneGraph(rotations, new_edges, base, (oc_edge, oc_side))

    def reduce_to_trivial(self) -> "PlaneGraph":
        """Replace every edge of color n > 1 by n parallel color-1 edges."""
        g = self
        for eid in sorted(self.edges):
            if g.edges[eid].color > 1:
                g = g.parallel_replace(eid)
        return g

    def is_trivially_colored(self) -> bool:
        return all(e.color == 1 for e in self.edges.values())

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v, "rotation": [["e", eid, end] for eid, end in self.rotations[v]]}
                for v in self.vertex_ids()
            ],
            "edges": [
                {"id": e.id, "tail": e.tail, "head": e.head, "color": e.color}
                for e in sorted(self.edges.values(), key=lambda e: e.id)
            ],
            "base_edge": self.base_edge,
            "outer_face_corner": ["e", self.outer_corner[0], self.outer_corner[1]],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1, sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "PlaneGraph":
        try:
            edges = [
                Edge(int(e["id"]), int(e["tail"]), int(e["head"]), int(e["color"]))
                for e in data["edges"]
            ]
            rotations = {}
            for v in data["vertices"]:
                rot = []
                for item in v["rotation"]:
                    tag, eid, end = item
                    if tag != "e":
                        raise GraphFormatError(f"bad rotation entry {item}")
                    rot.append((int(eid), str(end)))
                rotations[int(v["id"])] = rot
            tag, oc_edge, oc_side = data["outer_face_corner"]
            if tag != "e":
                raise GraphFormatError("bad outer_face_corner")
            base = int(data["base_edge"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"malformed graph file: {exc}") from exc
        return PlaneGraph(rotations, edges, base, (int(oc_edge), str(oc_side)))

    @staticmethod
    def from_json(text: str) -> "PlaneGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from exc
        return PlaneGraph.from_json_dict(data)

    @staticmethod
    def load(path: str) -> "PlaneGraph":
        with open(path, "r", encoding="utf-8") as fh:
            return PlaneGraph.from_json(fh.read())


def digon() -> PlaneGraph:
    """The smallest balanced transverse plane graph: u <-> v, colors 1."""
    edges = [Edge(0, 0, 1, 1), Edge(1, 1, 0, 1)]
    rotations = {
        0: [(0, TAIL), (1, HEAD)],
        1: [(0, HEAD), (1, TAIL)],
    }
    return PlaneGraph(rotations, edges, base_edge=0, outer_corner=(0, "left"))
