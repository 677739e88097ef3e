"""Clock moves on spanning trees: classification, paths, rectangles.

A clock move swaps one tree edge at a vertex for the adjacent incoming edge
(neighboring lattice points).  The union of the two trees contains a unique
cycle C through both swapped edges; C bounds a disk, and the move is Local
when the disk side of C holds no other edge at the moving vertex, Global
when the unbounded side holds none.  Locally-equivalent classes of trees are
exact coordinate boxes sharing one average norm; multiplying out the boxes
recovers Delta and proves its coefficients unimodal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .errors import TheoremViolation
from .kauffman import build_decorated
from .laurent import HalfPoly, box, is_trapezoidal, is_unimodal, strict_positive
from .plane_graph import PlaneGraph
from .spanning import LatticePoint, TreeSpace

LOCAL = "Local"
GLOBAL = "Global"


@dataclass(frozen=True)
class ClockMove:
    vertex: int  # the vertex id where the swap happens
    coordinate: int  # its index among non-root vertices
    from_point: LatticePoint
    to_point: LatticePoint
    direction: str  # "counter-clockwise" (coordinate +1) or "clockwise"
    kind: str  # Local | Global
    cycle: FrozenSet[int]  # edge ids of C
    dual_cycle: FrozenSet[int]  # edge ids whose duals form C*
    crossing_set: Dict[int, FrozenSet[int]]  # vertex -> edges of E_i meeting C*


@dataclass(frozen=True)
class MaxRectangle:
    lower: LatticePoint  # m_{alpha,i}
    upper: LatticePoint  # M_{alpha,i}
    members: FrozenSet[LatticePoint]
    average_norm: Fraction

    def contribution(self) -> HalfPoly:
        p = HalfPoly.one()
        for lo, hi in zip(self.lower, self.upper):
            p = p * box(lo, hi)
        return p


class ClockAnalysis:
    """Move classification and rectangle structure over one tree space."""

    def __init__(self, g: PlaneGraph):
        self.space = TreeSpace(g)
        self.graph = g
        self.diagram = build_decorated(g)
        # full dual adjacency; per-move traversals filter it by edge set
        self._dual_adj: Dict[int, List[Tuple[int, int]]] = {}
        for eid in g.edges:
            a, b = g.left_face(eid), g.right_face(eid)
            self._dual_adj.setdefault(a, []).append((b, eid))
            self._dual_adj.setdefault(b, []).append((a, eid))
        self._states: Dict[LatticePoint, Dict[int, str]] = {}
        self._moves: Dict[Tuple[LatticePoint, LatticePoint], ClockMove] = {}

    def _state(self, p: LatticePoint) -> Dict[int, str]:
        got = self._states.get(p)
        if got is None:
            got = self.space.tree_to_state(p).as_dict()
            self._states[p] = got
        return got

    # -- the cycle C and its two sides --------------------------------

    def _tree_path(self, tree_edges: Set[int], a: int, b: int) -> List[int]:
        """Edge ids of the undirected path from vertex a to b inside a tree."""
        g = self.graph
        adj: Dict[int, List[Tuple[int, int]]] = {}
        for eid in tree_edges:
            e = g.edges[eid]
            adj.setdefault(e.tail, []).append((e.head, eid))
            adj.setdefault(e.head, []).append((e.tail, eid))
        prev: Dict[int, Tuple[int, int]] = {}
        stack = [a]
        seen = {a}
        while stack:
            v = stack.pop()
            if v == b:
                break
            for w, eid in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    prev[w] = (v, eid)
                    stack.append(w)
        path = []
        v = b
        while v != a:
            v, eid = prev[v]
            path.append(eid)
        return path

    def _interior_faces(self, cycle: Set[int]) -> Set[int]:
        """Faces on the bounded side of the simple closed curve C."""
        g = self.graph
        comp = {g.outer_face}
        stack = [g.outer_face]
        while stack:
            f = stack.pop()
            for f2, eid in self._dual_adj.get(f, ()):
                if eid not in cycle and f2 not in comp:
                    comp.add(f2)
                    stack.append(f2)
        inside = {f.id for f in g.faces()} - comp
        assert inside, "cycle has no bounded side"
        return inside

    # -- classification --------------------------------------------------

    def classify(self, p: LatticePoint, q: LatticePoint) -> ClockMove:
        cached = self._moves.get((p, q))
        if cached is not None:
            return cached
        space = self.space
        if not (space.is_spanning_tree(p) and space.is_spanning_tree(q)):
            raise ValueError("both endpoints must be spanning trees")
        if not space.neighboring(p, q):
            raise ValueError("not a clock move: points are not neighboring")
        i = next(j for j in range(space.k) if p[j] != q[j])
        v = space.vertices[i]
        e_old = space.incoming[i][p[i] - 1]
        e_new = space.incoming[i][q[i] - 1]
        tree = set(space.subgraph_of(p))

        # C = e_new plus the tree path between its endpoints
        g = self.graph
        en = g.edges[e_new]
        cycle = set(self._tree_path(tree, en.tail, en.head))
        cycle.add(e_new)
        assert e_old in cycle

        inside = self._interior_faces(cycle)

        # the empty angular sector at v between the two swapped edges is
        # bounded by their adjacent incoming half-edges; its face tells
        # which side of C is free of other edges at v.  The sector just
        # after a head half-edge in rotation order is the face containing
        # the forward dart of that edge, which is the face on its right.
        lo_edge = e_old if p[i] < q[i] else e_new  # counter-clockwise earlier
        sector_face = g.right_face(lo_edge)
        kind = LOCAL if sector_face in inside else GLOBAL

        # cross-check against the Kauffman-state criterion
        s_p = self._state(p)
        s_q = self._state(q)
        diff = {c for c in s_p if s_p[c] != s_q[c]}
        state_kind = LOCAL if diff == {e_old, e_new} else GLOBAL
        if kind != state_kind:
            raise AssertionError(
                f"move classification mismatch at {p}->{q}: "
                f"sector says {kind}, states say {state_kind}"
            )

        dual_cycle, crossing_set = self._dual_cycle(tree, e_old, e_new)
        mv = ClockMove(
            vertex=v,
            coordinate=i,
            from_point=p,
            to_point=q,
            direction="counter-clockwise" if q[i] > p[i] else "clockwise",
            kind=kind,
            cycle=frozenset(cycle),
            dual_cycle=frozenset(dual_cycle),
            crossing_set=crossing_set,
        )
        self._moves[(p, q)] = mv
        return mv

    def _dual_cycle(
        self, tree: Set[int], e_old: int, e_new: int
    ) -> Tuple[Set[int], Dict[int, FrozenSet[int]]]:
        """C* in T* + dual(e_old), as the set of primal edges it crosses."""
        g = self.graph
        dual_tree = set(g.edges) - tree  # duals of these form T*
        dual_tree.discard(e_old)
        # path in T* between the two faces flanking e_old
        a, b = g.left_face(e_old), g.right_face(e_old)
        prev: Dict[int, Tuple[int, int]] = {}
        stack, seen = [a], {a}
        while stack:
            f = stack.pop()
            if f == b:
                break
            for f2, eid in self._dual_adj.get(f, ()):
                if eid in dual_tree and f2 not in seen:
                    seen.add(f2)
                    prev[f2] = (f, eid)
                    stack.append(f2)
        crossed = {e_old}
        f = b
        while f != a:
            f, eid = prev[f]
            crossed.add(eid)
        by_head: Dict[int, Set[int]] = {}
        for eid in crossed:
            by_head.setdefault(g.edges[eid].head, set()).add(eid)
        return crossed, {v: frozenset(s) for v, s in by_head.items()}

    def divergence_balance(self, move: ClockMove) -> bool:
        """Among the edges crossing C*, heads split evenly between the two
        sides (the discrete divergence theorem behind the degree lemma)."""
        g = self.graph
        crossed = set(move.dual_cycle)
        # components of the primal graph with the crossed edges removed
        parent = {v: v for v in g.vertex_ids()}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for eid, e in g.edges.items():
            if eid not in crossed:
                pa, pb = find(e.tail), find(e.head)
                if pa != pb:
                    parent[pa] = pb
        sides = {find(v) for v in g.vertex_ids()}
        if len(sides) != 2:
            return False
        mark = next(iter(sides))
        heads = [1 if find(g.edges[eid].head) == mark else 0 for eid in crossed]
        return sum(heads) * 2 == len(heads)

    def _state_min_twice_exp(self, s: Dict[int, str]) -> int:
        """Lowest twice-exponent of the state's monomial, by corner counts.

        Every corner contributes a factor whose lowest term is known: the
        marked N gives t^(i/2), an unmarked N the quantum integer with
        lowest term t^(-(i-1)/2), E gives t^(i/2) and W gives t^(-i/2).
        """
        g = self.graph
        base = g.base_edge
        total = 0
        for c, k in s.items():
            i = g.edges[c].color
            if c == base:
                total += i
            elif k == "N":
                total -= i - 1
            elif k == "E":
                total += i
            else:
                total -= i
        return total

    def degree_shift(self, move: ClockMove) -> int:
        space = self.space
        shift = space.norm(move.to_point) - space.norm(move.from_point)
        m_p = self._state_min_twice_exp(self._state(move.from_point))
        m_q = self._state_min_twice_exp(self._state(move.to_point))
        by_monomials = (m_q - m_p) // 2
        if shift != by_monomials or shift not in (-1, 1):
            raise AssertionError(
                f"degree shift mismatch: lattice {shift}, monomials {by_monomials}"
            )
        return shift

    # -- neighborhoods, paths, reach ------------------------------------

    def neighbors(self, p: LatticePoint) -> List[ClockMove]:
        space = self.space
        if p not in space.enumerate_trees():
            raise ValueError(f"{p} is not a spanning tree point")
        out = []
        for i in range(space.k):
            for dx in (-1, 1):
                x = p[i] + dx
                if 1 <= x <= space.dims[i]:
                    q = p[:i] + (x,) + p[i + 1 :]
                    if space._is_tree_fast(q):
                        out.append(self.classify(p, q))
        return out

    def clock_path(self, p: LatticePoint, q: LatticePoint) -> List[ClockMove]:
        """Some move sequence from p to q; existence is the clock theorem."""
        space = self.space
        X = space.enumerate_trees()
        if p not in X or q not in X:
            raise ValueError("both endpoints must be spanning trees")
        if p == q:
            return []
        if space.distance(p, q) == 1:
            # interpolate one coordinate; every intermediate point is a tree
            i = next(j for j in range(space.k) if p[j] != q[j])
            step = 1 if q[i] > p[i] else -1
            moves = []
            cur = p
            while cur != q:
                nxt = cur[:i] + (cur[i] + step,) + cur[i + 1 :]
                assert nxt in X, "interpolation left the tree set"
                moves.append(self.classify(cur, nxt))
                cur = nxt
            return moves
        # distance >= 2: move one differing coordinate to its target; some
        # choice always yields a tree (else the two-coordinate repair of the
        # clock-theorem proof applies, which is itself such a choice)
        for i in range(space.k):
            if p[i] == q[i]:
                continue
            mid = p[:i] + (q[i],) + p[i + 1 :]
            if mid in X:
                return self.clock_path(p, mid) + self.clock_path(mid, q)
        # repair: swap a second differing coordinate instead
        for i in range(space.k):
            if p[i] == q[i]:
                continue
            for j in range(space.k):
                if j == i or p[j] == q[j]:
                    continue
                mid = tuple(
                    q[l] if l in (i, j) else p[l] for l in range(space.k)
                )
                if mid in X:
                    return self.clock_path(p, mid) + self.clock_path(mid, q)
        raise AssertionError(f"no clock path step from {p} toward {q}")

    def local_reach(self, p: LatticePoint, i: int) -> Tuple[int, int]:
        """(L, R): maximal runs of Local moves decreasing / increasing x_i."""
        space = self.space

        def run(step: int) -> int:
            n, cur = 0, p
            while True:
                x = cur[i] + step
                if not 1 <= x <= space.dims[i]:
                    return n
                q = cur[:i] + (x,) + cur[i + 1 :]
                if not space._is_tree_fast(q):
                    return n
                if self.classify(cur, q).kind != LOCAL:
                    return n
                n += 1
                cur = q

        return run(-1), run(1)

    # -- maximal rectangles -----------------------------------------------

    def maximal_rectangles(self) -> List[MaxRectangle]:
        space = self.space
        X = sorted(space.enumerate_trees())
        index = {p: n for n, p in enumerate(X)}
        parent = list(range(len(X)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p in X:
            for i in range(space.k):
                x = p[i] + 1
                if x > space.dims[i]:
                    continue
                q = p[:i] + (x,) + p[i + 1 :]
                if q in index and self.classify(p, q).kind == LOCAL:
                    parent[find(index[p])] = find(index[q])

        groups: Dict[int, List[LatticePoint]] = {}
        for p in X:
            groups.setdefault(find(index[p]), []).append(p)

        rects = []
        for members in groups.values():
            lower = tuple(min(p[i] for p in members) for i in range(space.k))
            upper = tuple(max(p[i] for p in members) for i in range(space.k))
            box_size = 1
            for lo, hi in zip(lower, upper):
                box_size *= hi - lo + 1
            if box_size != len(members):
                raise TheoremViolation(
                    "maximal rectangle is not a full box",
                    self._witness(points=sorted(members)),
                )
            avg = Fraction(sum(lo + hi for lo, hi in zip(lower, upper)), 2)
            rects.append(
                MaxRectangle(lower, upper, frozenset(members), avg)
            )
        rects.sort(key=lambda r: r.lower)

        averages = {r.average_norm for r in rects}
        if len(averages) > 1:
            raise TheoremViolation(
                "maximal rectangles disagree on average norm",
                self._witness(averages=sorted(map(str, averages))),
            )
        # cross-check: reach counts recompute the same average
        for r in rects:
            for p in list(r.members)[:4]:
                total = Fraction(0)
                for i in range(space.k):
                    L, R = self.local_reach(p, i)
                    if (p[i] - L, p[i] + R) != (r.lower[i], r.upper[i]):
                        raise TheoremViolation(
                            "local reach disagrees with rectangle walls",
                            self._witness(point=p, coordinate=i),
                        )
                    total += p[i] + Fraction(R - L, 2)
                if total != r.average_norm:
                    raise TheoremViolation(
                        "reach-based average norm mismatch",
                        self._witness(point=p),
                    )
        return rects

    def _witness(self, **extra) -> dict:
        w = {"graph": self.graph.to_json_dict()}
        w.update(extra)
        return w

    # -- whole-graph reports ------------------------------------------------

    def verify_moves(self) -> int:
        """Classify every move in the clock graph; returns the move count.

        Checks connectivity of the move graph, the +-1 degree shift, the
        Local/Global dichotomy and divergence balance on Global moves.
        """
        space = self.space
        X = sorted(space.enumerate_trees())
        count = 0
        seen_pairs = set()
        for p in X:
            for mv in self.neighbors(p):
                pair = tuple(sorted((mv.from_point, mv.to_point)))
                if pair in seen_pairs:
                    continue
                seen_pairs.add(pair)
                count += 1
                self.degree_shift(mv)  # raises on mismatch
                if mv.kind == GLOBAL and not self.divergence_balance(mv):
                    raise TheoremViolation(
                        "divergence balance failed on a global move",
                        self._witness(move=(mv.from_point, mv.to_point)),
                    )
        # connectivity (already asserted inside enumerate_trees when the
        # scan runs; recheck here from the move relation alone)
        if X:
            seen = {X[0]}
            stack = [X[0]]
            while stack:
                p = stack.pop()
                for mv in self.neighbors(p):
                    if mv.to_point not in seen:
                        seen.add(mv.to_point)
                        stack.append(mv.to_point)
            if len(seen) != len(X):
                raise TheoremViolation(
                    "clock-move graph is disconnected",
                    self._witness(reached=len(seen), total=len(X)),
                )
        return count

    def unimodality_report(self) -> dict:
        delta = HalfPoly.zero()
        for p in self.space.enumerate_trees():
            delta = delta + HalfPoly.monomial(2 * self.space.norm(p))
        delta = delta.canonicalize()
        coeffs = delta.coeff_seq()
        if len(self.space.enumerate_trees()) >= 2 and len(coeffs) == 1:
            # with two or more trees some move exists, and moves shift the
            # norm; a constant Delta would contradict that
            raise TheoremViolation(
                "constant Delta with at least two spanning trees",
                self._witness(coeffs=coeffs),
            )
        rects = self.maximal_rectangles()
        contributions = [r.contribution() for r in rects]
        total = HalfPoly.zero()
        for c in contributions:
            total = total + c
        report = {
            "coefficients": coeffs,
            "unimodal": is_unimodal(coeffs),
            "strictly_positive": strict_positive(coeffs),
            "trapezoidal": is_trapezoidal(coeffs),  # informational only
            "rectangles": [
                {
                    "lower": list(r.lower),
                    "upper": list(r.upper),
                    "size": len(r.members),
                    "average_norm": str(r.average_norm),
                    "contribution": c.coeff_seq(),
                    "contribution_trapezoidal": is_trapezoidal(c.coeff_seq()),
                }
                for r, c in zip(rects, contributions)
            ],
            "axis": str(rects[0].average_norm) if rects else None,
            "decomposition_matches": total.doteq(delta),
        }
        if not report["unimodal"]:
            raise TheoremViolation("Delta is not unimodal", self._witness(coeffs=coeffs))
        if not report["strictly_positive"]:
            raise TheoremViolation(
                "Delta has a gap or negative coefficient", self._witness(coeffs=coeffs)
            )
        if not all(r["contribution_trapezoidal"] for r in report["rectangles"]):
            raise TheoremViolation(
                "a rectangle contribution is not trapezoidal", self._witness()
            )
        if not report["decomposition_matches"]:
            raise TheoremViolation(
                "rectangle decomposition does not sum to Delta", self._witness()
            )
        return report
