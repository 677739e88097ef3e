import pytest

from moyclock.plane_graph import (
    HEAD,
    TAIL,
    Edge,
    GraphFormatError,
    PlaneGraph,
    digon,
)


def test_digon_validates():
    g = digon()
    report = g.validate()
    assert report.ok, str(report)
    assert len(g.faces()) == 2
    assert len(g.vertex_ids()) == 2


def test_euler_formula_on_fixtures(digon_path, theta_path):
    for path in (digon_path, theta_path):
        g = PlaneGraph.load(path)
        v = len(g.vertex_ids())
        e = len(g.edges)
        f = len(g.faces())
        assert v - e + f == 2


def test_face_sides_partition_edge_sides():
    g = digon()
    sides = [s for face in g.faces() for s in face.sides()]
    assert len(sides) == 2 * len(g.edges)
    assert len(set(sides)) == len(sides)


def test_unbalanced_coloring_fails():
    edges = [Edge(0, 0, 1, 2), Edge(1, 1, 0, 1)]
    rotations = {0: [(0, TAIL), (1, HEAD)], 1: [(0, HEAD), (1, TAIL)]}
    g = PlaneGraph(rotations, edges, 0, (0, "left"))
    report = g.validate()
    assert not report.ok
    assert any("balanc" in name for name, _ in report.failures())


def test_nontransverse_fails():
    # 4-valent vertex with alternating in/out half-edges
    edges = [Edge(i, 0, 1, 1) if i % 2 == 0 else Edge(i, 1, 0, 1) for i in range(4)]
    rotations = {
        0: [(0, TAIL), (1, HEAD), (2, TAIL), (3, HEAD)],
        1: [(0, HEAD), (3, TAIL), (2, HEAD), (1, TAIL)],
    }
    g = PlaneGraph(rotations, edges, 0, (0, "left"))
    report = g.validate()
    assert not report.ok
    assert any("transvers" in name for name, _ in report.failures())


def test_unresolved_reference_is_structural_error():
    edges = [Edge(0, 0, 1, 1), Edge(1, 1, 0, 1)]
    rotations = {0: [(0, TAIL), (7, HEAD)], 1: [(0, HEAD), (1, TAIL)]}
    with pytest.raises(GraphFormatError):
        PlaneGraph(rotations, edges, 0, (0, "left"))


def test_incoming_order(theta_path):
    g = PlaneGraph.load(theta_path)
    for v in g.vertex_ids():
        order = g.incoming_order(v)
        assert len(order) == len(g.in_edges(v))
        assert set(order) == set(g.in_edges(v))
        # a subsequence of the doubled rotation order
        rot = [eid for eid, end in g.rotations[v] * 2 if end == HEAD]
        n = len(order)
        assert any(rot[i : i + n] == order for i in range(n + 1))


def test_left_right_faces_are_distinct_on_digon():
    g = digon()
    for eid in g.edges:
        assert g.left_face(eid) != g.right_face(eid)


def test_parallel_replace(theta_path):
    g = PlaneGraph.load(theta_path)
    reduced = g.reduce_to_trivial()
    assert reduced.is_trivially_colored()
    assert reduced.validate().ok
    # edge count is the total color
    assert len(reduced.edges) == sum(e.color for e in g.edges.values())
    # idempotent on trivial graphs
    assert reduced.reduce_to_trivial() is reduced


def test_dual_counts(theta_path):
    g = PlaneGraph.load(theta_path)
    d = g.dual()
    assert d.face_count == len(g.faces())
    assert len(d.left_face) == len(g.edges)
    assert d.root == g.outer_face
    for eid in g.edges:
        assert d.endpoints(eid) == (g.left_face(eid), g.right_face(eid))


def test_json_roundtrip(theta_path):
    g = PlaneGraph.load(theta_path)
    h = PlaneGraph.from_json(g.to_json())
    assert h.to_json_dict() == g.to_json_dict()
    assert h.validate().ok


def test_with_base_edge(theta_path):
    g = PlaneGraph.load(theta_path)
    for eid in g.edges:
        h = g.with_base_edge(eid)
        assert h.base_edge == eid
        assert h.edges.keys() == g.edges.keys()


def test_disconnected_rejected():
    edges = [
        Edge(0, 0, 1, 1),
        Edge(1, 1, 0, 1),
        Edge(2, 2, 3, 1),
        Edge(3, 3, 2, 1),
    ]
    rotations = {
        0: [(0, TAIL), (1, HEAD)],
        1: [(0, HEAD), (1, TAIL)],
        2: [(2, TAIL), (3, HEAD)],
        3: [(2, HEAD), (3, TAIL)],
    }
    g = PlaneGraph(rotations, edges, 0, (0, "left"))
    assert not g.validate().ok
