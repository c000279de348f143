import pytest

import trilink


def test_simplex_validates():
    t = trilink.generate("simplex")
    r = trilink.validate(t)
    assert r["valid"]
    assert r["f_vector"] == [5, 10, 10, 5]
    assert r["euler_characteristic"] == 0


def test_cyclic_facet_count():
    for m in range(5, 10):
        t = trilink.generate("cyclic", m=m)
        assert len(t["tetrahedra"]) == m * (m - 3) // 2


def test_hopf_pipeline():
    g = trilink.generate("join")
    r = trilink.schlegel(g)
    ok, message = trilink.verify_embedding(g, r)
    assert ok, message
    hopf = trilink.check_link(g, [[4, 5, 6], [3, 1, 2]])
    assert hopf["components"] == [[1, 2, 3], [4, 5, 6]]
    dg = trilink.project(g, r, hopf)
    lk = trilink.linking_matrix(dg)[0][1]
    assert lk in (1, -1)
    assert trilink.diagram_text(dg, "svg").startswith("<svg")
    rep = trilink.bounds_report(g, hopf, coords4=g, realization=r, diagram=dg)
    assert rep["certificate"] == "polytopal"
    assert rep["cr_bounds"]["thm_1_1_1"] == "324"
    assert rep["achieved"] < 324


def test_triangles_of_simplex():
    links = trilink.enumerate_links(trilink.generate("simplex"), 1, 3)
    assert len(links) == 10


def test_moves_round_trip():
    t = trilink.generate("join")
    sub = trilink.stellar_subdivide(t, [1, 2, 4, 5])
    assert trilink.validate(sub)["valid"]
    back = trilink.contract_edge(sub, 1, 7)
    assert back["tetrahedra"] == t["tetrahedra"]
    moved = trilink.transport_link([[1, 2, 3]], sub)
    assert trilink.check_link(sub, moved)["components"] == moved["components"]


def test_shelling():
    t = trilink.generate("cyclic", m=7)
    s = trilink.find_shelling(t)
    assert s["status"] == "found"
    ok, _, _ = trilink.verify_shelling(t, s["order"])
    assert ok
    with pytest.raises(trilink.TrilinkError):
        trilink.verify_shelling(t, s["order"][:-1])


def test_bound_arithmetic():
    assert trilink.cr_bound_from_p(10, 35) == 432965316001


def test_errors():
    with pytest.raises(trilink.TrilinkError):
        trilink.check_link(trilink.generate("simplex"), [[1, 2]])
    with pytest.raises(trilink.TrilinkError):
        trilink.generate("nonsense")
    with pytest.raises(trilink.TrilinkError):
        trilink.validate({"vertices": [1, 2, 3, 4], "tetrahedra": [[2, 1, 3, 4]]})


def test_determinism():
    a = trilink.pachner_walk(trilink.generate("simplex"), 25, 11)
    b = trilink.pachner_walk(trilink.generate("simplex"), 25, 11)
    assert a == b
    assert trilink.validate(a)["valid"]
