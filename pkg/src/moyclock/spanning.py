"""Lattice-point spanning-tree model for the Alexander polynomial.

Fix the root r as the head of the base edge.  Order the non-root vertices
v_1 < ... < v_k by id.  A lattice point (x_1,...,x_k) with 1 <= x_i <= d_i
picks the x_i-th incoming edge at v_i in counter-clockwise order; the point
represents a rooted spanning tree exactly when that subgraph is connected
(equivalently acyclic).  Summing t^|x| over tree points gives Delta up to a
power of t; a weighted matrix-tree determinant recomputes the same
polynomial independently.
"""

from __future__ import annotations

import os
from math import prod
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import sympy

from .kauffman import E, KauffmanState, N, W, build_decorated
from .laurent import HalfPoly
from .plane_graph import PlaneGraph

LatticePoint = Tuple[int, ...]

DEFAULT_SCAN_BUDGET = 10**7


def scan_budget() -> int:
    return int(os.environ.get("MOY_SCAN_BUDGET", DEFAULT_SCAN_BUDGET))


class TreeSpace:
    """Fixed root, vertex order and incoming-edge tables for one graph."""

    def __init__(self, g: PlaneGraph):
        if not g.base_on_outer_face():
            raise ValueError("base edge must border the unbounded region")
        self.graph = g
        self.root = g.edges[g.base_edge].head
        self.vertices: List[int] = [v for v in g.vertex_ids() if v != self.root]
        self.incoming: List[List[int]] = [g.incoming_order(v) for v in self.vertices]
        self.dims: Tuple[int, ...] = tuple(len(lst) for lst in self.incoming)
        self.k = len(self.vertices)
        self._X: Optional[FrozenSet[LatticePoint]] = None
        # parent vertex per (coordinate, value), for the fast cycle test
        self._parent = [
            [g.edges[eid].tail for eid in lst] for lst in self.incoming
        ]
        self._tree_cache: Dict[LatticePoint, bool] = {}

    # -- lattice points ------------------------------------------------

    def check_bounds(self, p: LatticePoint) -> None:
        if len(p) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(p)}")
        for i, (x, d) in enumerate(zip(p, self.dims)):
            if not 1 <= x <= d:
                raise ValueError(f"coordinate {i} out of bounds: {x} not in 1..{d}")

    def subgraph_of(self, p: LatticePoint) -> List[int]:
        """Edge ids picked by p, one per non-root vertex."""
        self.check_bounds(p)
        return [self.incoming[i][x - 1] for i, x in enumerate(p)]

    def is_spanning_tree(self, p: LatticePoint) -> bool:
        edges = self.subgraph_of(p)
        g = self.graph
        # connectivity via union-find on the undirected subgraph
        parent = {v: v for v in g.vertex_ids()}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        components = len(parent)
        for eid in edges:
            e = g.edges[eid]
            ra, rb = find(e.tail), find(e.head)
            if ra != rb:
                parent[ra] = rb
                components -= 1
        connected = components == 1
        # acyclicity: walk back along the unique in-edges from every vertex
        in_edge = {g.edges[eid].head: eid for eid in edges}
        acyclic = True
        for start in in_edge:
            v, seen = start, set()
            while v in in_edge and acyclic:
                if v in seen:
                    acyclic = False
                seen.add(v)
                v = g.edges[in_edge[v]].tail
        # sanity: for in-degree-1 subgraphs both notions coincide
        # (a self-loop selection counts as a cycle and breaks connectivity)
        assert connected == acyclic, (p, edges)
        return connected

    def _is_tree_fast(self, p: LatticePoint) -> bool:
        """Cycle-free test only, cached; agreement with the union-find
        connectivity test is asserted exhaustively by _scan."""
        hit = self._tree_cache.get(p)
        if hit is not None:
            return hit
        parent = {
            v: self._parent[i][x - 1] for i, (v, x) in enumerate(zip(self.vertices, p))
        }
        state: Dict[int, int] = {}
        ok = True
        for start in self.vertices:
            v = start
            chain = []
            while ok:
                s = state.get(v)
                if s == 1 or v == self.root:
                    break
                if s == 0:
                    ok = False
                    break
                state[v] = 0
                chain.append(v)
                v = parent[v]
            for u in chain:
                state[u] = 1
            if not ok:
                break
        self._tree_cache[p] = ok
        return ok

    def norm(self, p: LatticePoint) -> int:
        return sum(p)

    @staticmethod
    def distance(p: LatticePoint, q: LatticePoint) -> int:
        if len(p) != len(q):
            raise ValueError("dimension mismatch")
        return sum(1 for a, b in zip(p, q) if a != b)

    def neighboring(self, p: LatticePoint, q: LatticePoint) -> bool:
        return self.distance(p, q) == 1 and abs(self.norm(p) - self.norm(q)) == 1

    # -- enumeration ----------------------------------------------------

    def _scan(self) -> Set[LatticePoint]:
        found = set()
        point = [1] * self.k
        while True:
            p = tuple(point)
            if self.is_spanning_tree(p):
                found.add(p)
            i = self.k - 1
            while i >= 0 and point[i] == self.dims[i]:
                point[i] = 1
                i -= 1
            if i < 0:
                return found
            point[i] += 1

    def _raw_neighbors(self, p: LatticePoint) -> List[LatticePoint]:
        out = []
        for i in range(self.k):
            for dx in (-1, 1):
                x = p[i] + dx
                if 1 <= x <= self.dims[i]:
                    q = p[:i] + (x,) + p[i + 1 :]
                    if self._is_tree_fast(q):
                        out.append(q)
        return out

    def _bfs(self, seed: LatticePoint) -> Set[LatticePoint]:
        seen = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for p in frontier:
                for q in self._raw_neighbors(p):
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return seen

    def seed_tree(self) -> LatticePoint:
        """One rooted spanning tree, grown backwards from the root."""
        g = self.graph
        chosen: Dict[int, int] = {}  # vertex -> chosen incoming edge id
        reached = {self.root}
        frontier = [self.root]
        while frontier:
            nxt = []
            for u in frontier:
                for eid in g.out_edges(u):
                    w = g.edges[eid].head
                    if w not in reached:
                        reached.add(w)
                        chosen[w] = eid
                        nxt.append(w)
            frontier = nxt
        if len(reached) != len(g.vertex_ids()):
            raise ValueError("graph has no rooted spanning tree")
        return tuple(
            self.incoming[i].index(chosen[v]) + 1 for i, v in enumerate(self.vertices)
        )

    def enumerate_trees(self) -> FrozenSet[LatticePoint]:
        """The set X of all tree points.

        When the lattice fits in the scan budget, X is computed both by a
        full scan and by clock-move expansion from a seed tree, and the two
        must coincide (the clock theorem, made executable).  Past the
        budget only the expansion runs.
        """
        if self._X is not None:
            return self._X
        lattice_size = prod(self.dims) if self.k else 1
        by_bfs = self._bfs(self.seed_tree())
        if lattice_size <= scan_budget():
            by_scan = self._scan()
            assert by_scan == by_bfs, "clock-move expansion missed trees"
        if not by_bfs:
            raise ValueError("graph has no rooted spanning tree")
        self._X = frozenset(by_bfs)
        return self._X

    # -- the phi bijection onto Kauffman states --------------------------

    def tree_to_state(self, p: LatticePoint) -> KauffmanState:
        g = self.graph
        tree_edges = set(self.subgraph_of(p))
        assignment: Dict[int, str] = {g.base_edge: N}
        for eid in tree_edges:
            assignment[eid] = N

        # dual spanning tree: duals of all non-tree edges; walk it from the
        # outer face, assigning E/W to each crossing as the walk enters the
        # region holding that corner
        dual_adj: Dict[int, List[Tuple[int, int]]] = {}
        for eid in g.edges:
            if eid in tree_edges:
                continue
            a, b = g.left_face(eid), g.right_face(eid)
            dual_adj.setdefault(a, []).append((b, eid))
            dual_adj.setdefault(b, []).append((a, eid))
        seen = {g.outer_face}
        stack = [g.outer_face]
        while stack:
            f = stack.pop()
            for f2, eid in dual_adj.get(f, ()):
                if f2 in seen:
                    continue
                seen.add(f2)
                stack.append(f2)
                if eid != g.base_edge:
                    assignment[eid] = E if f2 == g.right_face(eid) else W
        assert len(assignment) == len(g.edges), "dual walk missed crossings"
        return KauffmanState(tuple(sorted(assignment.items())))


def alexander_spanning(g: PlaneGraph) -> HalfPoly:
    """Delta via the lattice model: sum of t^|x| over tree points."""
    if not g.is_trivially_colored():
        raise ValueError("spanning model needs a trivially colored graph")
    space = TreeSpace(g)
    total = HalfPoly.zero()
    for p in space.enumerate_trees():
        total = total + HalfPoly.monomial(2 * space.norm(p))
    return total.canonicalize()


def alexander_matrix_tree(g: PlaneGraph) -> HalfPoly:
    """Delta via a weighted directed matrix-tree determinant.

    The x-th incoming edge at a non-root vertex carries weight t^x; the
    determinant of the reduced weighted Laplacian then sums the tree
    monomials, independently of any state or lattice enumeration.
    """
    if not g.is_trivially_colored():
        raise ValueError("matrix-tree oracle needs a trivially colored graph")
    space = TreeSpace(g)
    t = sympy.Symbol("t")
    idx = {v: i for i, v in enumerate(space.vertices)}
    k = space.k
    L = sympy.zeros(k, k)
    for i, v in enumerate(space.vertices):
        for x, eid in enumerate(space.incoming[i], start=1):
            tail = g.edges[eid].tail
            if tail == v:
                continue  # self-loops never lie in a tree; they cancel in L
            L[i, i] += t**x
            if tail in idx:
                L[idx[tail], i] -= t**x
    det = sympy.expand(L.det(method="berkowitz")) if k else sympy.Integer(1)
    poly = sympy.Poly(det, t)
    coeffs: Dict[int, int] = {}
    for (exp,), c in poly.terms():
        coeffs[2 * int(exp)] = int(c)
    result = HalfPoly(coeffs)
    if result.is_zero():
        raise ValueError("matrix-tree determinant vanished on a valid graph")
    return result.canonicalize()


def verify_phi_bijection(g: PlaneGraph) -> None:
    """Assert that tree_to_state maps X bijectively onto the state set."""
    from .kauffman import enumerate_states

    space = TreeSpace(g)
    d = build_decorated(g)
    states = set(enumerate_states(d))
    images = {space.tree_to_state(p) for p in space.enumerate_trees()}
    if images != states:
        raise AssertionError(
            f"phi is not a bijection: {len(images)} tree images vs {len(states)} states"
        )
