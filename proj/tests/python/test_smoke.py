import pytest

qf = pytest.importorskip("quadforest")


def test_bound():
    assert qf.bound(8) == 5
    assert qf.bound(1) == 1
    assert qf.bound(16) == 10


def test_cube_is_tight():
    q3 = qf.cube()
    assert q3.n == 8
    assert q3.is_quadrangulation()
    cert = qf.a_exact(q3.graph)
    assert cert["size"] == 5
    assert q3.graph.induces_forest(cert["vertices"])


def test_bruteforce_agrees():
    g = qf.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert qf.a_exact(g)["size"] == qf.a_bruteforce(g)["size"] == 3


def test_graph6_round_trip():
    g = qf.parse_graph6("Cl")
    assert g.n == 4
    assert qf.emit_graph6(g) == "Cl"


def test_planar_code_round_trip():
    blob = qf.emit_planar_code([qf.cube()])
    back = qf.parse_planar_code(blob)
    assert len(back) == 1
    assert qf.emit_planar_code(back) == blob


def test_detect_and_audit():
    q3 = qf.cube()
    hits = qf.detect(q3)
    assert any(tag == "LowDegPath" for tag, _ in hits)
    rep = qf.audit(q3)
    assert rep["initial_total_q"] == -32
    assert rep["final_total_q"] == -32
    assert rep["hits_present"]


def test_double_cube():
    dc = qf.double_cube_matching()
    assert dc.n == 16
    assert qf.a_exact(dc.graph)["size"] == 10 == qf.bound(16)


def test_build_forest_and_generate():
    for pg in qf.generate("random_quadrangulations_by_face_expansion", 5, seed=9):
        rep = qf.build_forest(pg)
        assert rep["certificate"]["size"] >= qf.bound(pg.n)
        assert pg.graph.induces_forest(rep["certificate"]["vertices"])


def test_inequalities():
    assert qf.check_ineq1(30)["pass"]
    v = qf.check_ineq2(2, 30)
    assert v["pass"]
    assert all(e["realized"] for e in v["exceptions"])


def test_forced_vertex():
    q3 = qf.cube()
    for v in range(8):
        cert = qf.a_with_forced_vertex(q3.graph, v)
        assert cert["size"] == 5
        assert v in cert["vertices"]
