import pytest

import oddplanar as op


def k5_drawing():
    return op.random_drawing(op.Multigraph.complete(5), seed=3, model="convex")


def test_round_trip_and_validate():
    d = k5_drawing()
    text = d.serialize()
    back = op.parse_drawing(text)
    assert back == d
    assert op.serialize_drawing(back) == text
    assert op.validate(d) == []
    assert d.graph == op.Multigraph.complete(5)


def test_convex_k5_has_five_crossings():
    st = op.stats(k5_drawing())
    assert st["values"]["cr"]["plus"] == 5
    assert st["values"]["ocr"]["plus"] == 5


def test_lemma1_interleaved_loops():
    d = op.lemma1_redraw([0, 1, 0, 1])
    assert op.validate(d) == []
    assert d.crossing_count >= 1


def test_transform_and_embed():
    g = op.random_planar_graph(8, 12, 5)
    d = op.random_drawing(g, seed=5, model="perturbed-even", moves=4)
    plane = op.embed(d)
    assert plane.crossing_count == 0
    assert plane.graph == g
    result, trace = op.transform(k5_drawing(), 5)
    assert op.validate(result) == []
    assert trace["k"] == 5


def test_bounds():
    assert op.mk_upper(0, 10) == (24, True)
    assert op.mk_upper(1, 10)[0] == 32
    report = op.bounds(1, 10)
    assert report["modd_upper"] == 41
    assert op.audit(k5_drawing(), 5)["ok"]


def test_oracle():
    r = op.crossing_value(op.Multigraph.complete_bipartite(3, 3), "ocr", "+")
    assert r["exact"] and r["value"] == 1
    assert op.validate(r["witness"]) == []
    with pytest.raises(op.OddplanarError) as info:
        op.crossing_value(op.Multigraph.complete(6), "cr", "+", max_crossings=3, max_candidates=5)
    assert info.value.args[1] == "BudgetExceeded"


def test_sample_and_search_are_seeded():
    d = k5_drawing()
    a = op.sample(d, 0.5, 2000, seed=7, threads=1)
    b = op.sample(d, 0.5, 2000, seed=7, threads=3)
    assert a == b
    s = op.search(0, 6, iterations=500, seed=2)
    assert s["edges"] == 12


def test_render_svg():
    svg = op.render_svg(k5_drawing())
    assert svg.startswith("<svg") or svg.startswith("<?xml")
    assert svg.count('class="vertex"') == 5


def test_bad_document():
    with pytest.raises(op.OddplanarError) as info:
        op.parse_drawing("{")
    assert info.value.args[1] == "ParseError"
