"""Deterministic random fixtures grown from the digon.

Every operation preserves validity (balance, transversality, planarity),
so any composition starting from the digon yields a usable test graph.
The four moves:

  (a) subdivide an edge with a new 2-valent vertex;
  (b) split an edge of color c >= 2 into a parallel (c-1, 1) pair;
  (c) splice two parallel same-direction edges through a new transverse
      4-valent vertex;
  (d) raise every color along a directed cycle by one.

Moves (a) and (c) grow the vertex count; (b) and (d) reshape colors so the
corpus is not all trivially colored.  Each candidate is re-validated and
rejected on failure, which keeps the construction honest at the cost of a
few wasted draws.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .plane_graph import HEAD, TAIL, Edge, PlaneGraph, digon


def _next_ids(g: PlaneGraph) -> Tuple[int, int]:
    return max(g.vertex_ids()) + 1, max(g.edges) + 1


def _checked(g: Optional[PlaneGraph]) -> Optional[PlaneGraph]:
    if g is None:
        return None
    try:
        return g if g.validate().ok else None
    except Exception:
        return None


def _subdivide(g: PlaneGraph, rng: random.Random) -> Optional[PlaneGraph]:
    eid = rng.choice(sorted(g.edges))
    e = g.edges[eid]
    w, nid = _next_ids(g)
    edges = [x for x in g.edges.values() if x.id != eid]
    edges += [Edge(eid, e.tail, w, e.color), Edge(nid, w, e.head, e.color)]
    rotations = {
        v: [(nid, HEAD) if h == (eid, HEAD) else h for h in rot]
        for v, rot in g.rotations.items()
    }
    rotations[w] = [(eid, HEAD), (nid, TAIL)]
    return _checked(PlaneGraph(rotations, edges, g.base_edge, g.outer_corner))


def _split_color(g: PlaneGraph, rng: random.Random) -> Optional[PlaneGraph]:
    candidates = sorted(e.id for e in g.edges.values() if e.color >= 2)
    if not candidates:
        return None
    eid = rng.choice(candidates)
    e = g.edges[eid]
    _, nid = _next_ids(g)
    edges = [x for x in g.edges.values() if x.id != eid]
    edges += [Edge(eid, e.tail, e.head, e.color - 1), Edge(nid, e.tail, e.head, 1)]
    rotations = {}
    for v, rot in g.rotations.items():
        out: List[Tuple[int, str]] = []
        for h in rot:
            if h == (eid, HEAD):
                out += [(eid, HEAD), (nid, HEAD)]
            elif h == (eid, TAIL):
                out += [(nid, TAIL), (eid, TAIL)]
            else:
                out.append(h)
        rotations[v] = out
    return _checked(PlaneGraph(rotations, edges, g.base_edge, g.outer_corner))


def _splice(g: PlaneGraph, rng: random.Random) -> Optional[PlaneGraph]:
    pairs = []
    for e1 in g.edges.values():
        for e2 in g.edges.values():
            if e1.id < e2.id and e1.tail == e2.tail and e1.head == e2.head:
                if e1.tail != e1.head:
                    pairs.append((e1.id, e2.id))
    if not pairs:
        return None
    a, b = rng.choice(sorted(pairs))
    ea, eb = g.edges[a], g.edges[b]
    w, nid = _next_ids(g)
    na, nb = nid, nid + 1
    edges = [x for x in g.edges.values() if x.id not in (a, b)]
    edges += [
        Edge(a, ea.tail, w, ea.color),
        Edge(b, eb.tail, w, eb.color),
        Edge(na, w, ea.head, ea.color),
        Edge(nb, w, eb.head, eb.color),
    ]
    rotations = {
        v: [
            (na, HEAD) if h == (a, HEAD) else (nb, HEAD) if h == (b, HEAD) else h
            for h in rot
        ]
        for v, rot in g.rotations.items()
    }
    # the planar order of the four strands at w depends on which side of
    # the parallel pair faces which; try both transverse pairings
    for mid in ([(a, HEAD), (b, HEAD), (nb, TAIL), (na, TAIL)],
                [(a, HEAD), (b, HEAD), (na, TAIL), (nb, TAIL)]):
        rotations[w] = mid
        got = _checked(
            PlaneGraph(dict(rotations), edges, g.base_edge, g.outer_corner)
        )
        if got is not None:
            return got
    return None


MAX_COLOR = 3


def _bump_cycle(g: PlaneGraph, rng: random.Random) -> Optional[PlaneGraph]:
    # a random out-edge walk must repeat a vertex; bump the cycle it closes
    v = rng.choice(g.vertex_ids())
    path: List[int] = []
    seen = {v: 0}
    while True:
        eid = rng.choice(sorted(g.out_edges(v)))
        path.append(eid)
        v = g.edges[eid].head
        if v in seen:
            cycle = path[seen[v]:]
            break
        seen[v] = len(path)
    if any(g.edges[eid].color >= MAX_COLOR for eid in cycle):
        return None
    edges = [
        Edge(e.id, e.tail, e.head, e.color + 1) if e.id in cycle else e
        for e in g.edges.values()
    ]
    return _checked(PlaneGraph(g.rotations, edges, g.base_edge, g.outer_corner))


GROW_OPS = (_subdivide, _splice)
RESHAPE_OPS = (_split_color, _bump_cycle)

# the tree lattice of the reduced graph must stay enumerable in bulk runs
LATTICE_BUDGET = 200


def _lattice_bound(g: PlaneGraph) -> int:
    root = g.edges[g.base_edge].head
    bound = 1
    for v in g.vertex_ids():
        if v == root:
            continue
        bound *= max(1, sum(g.edges[e].color for e in g.in_edges(v)))
    return bound


def _within_budget(g: Optional[PlaneGraph]) -> Optional[PlaneGraph]:
    if g is not None and _lattice_bound(g) > LATTICE_BUDGET:
        return None
    return g


def generate(seed: int, size: int) -> PlaneGraph:
    """A deterministic valid fixture with about `size` vertices.

    size <= 2 gives the digon itself.  Color moves are interleaved with
    growth so a fair share of the output edges carry colors above 1.
    Growth stops early if every move would push the reduced tree lattice
    past the enumeration budget.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    if size <= 2:
        return digon()
    rng = random.Random(seed)
    g = digon()
    stalls = 0
    while len(g.vertex_ids()) < size and stalls < 20:
        if rng.random() < 0.3:
            op = rng.choice(RESHAPE_OPS)
            g = _within_budget(op(g, rng)) or g
            continue
        got = _within_budget(rng.choice(GROW_OPS)(g, rng))
        if got is None:
            got = _within_budget(_subdivide(g, rng))
        if got is None:
            stalls += 1
            continue
        g = got
    for _ in range(2):
        if rng.random() < 0.5:
            op = rng.choice(RESHAPE_OPS)
            g = _within_budget(op(g, rng)) or g
    assert g.validate().ok
    return g
