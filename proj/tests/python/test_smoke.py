import pytest

import _graphjoin as gj

PARITY = [
    ("u0", "a1", "1"),
    ("u0", "b1", "1"),
    ("u1", "a0", "1"),
    ("u1", "b0", "1"),
]


def test_constructors_and_round_trips():
    c3 = gj.cycle(3)
    assert c3.vertex_count() == 3
    assert c3.labels() == ["u0", "u1", "u2"]
    assert c3.degree("u0") == "1/3"
    assert gj.parse_graph(c3.to_text()) == c3
    assert gj.parse_graph(c3.to_json()) == c3
    assert "Graph" in repr(c3)


def test_disjointness_verdicts():
    assert gj.strong_disjoint(gj.cycle(3), gj.path(2))
    assert not gj.strong_disjoint(gj.cycle(3), gj.cycle(4))
    assert gj.weak_disjoint(gj.cycle(3), gj.cycle(4))
    assert not gj.weak_disjoint(gj.cycle(3), gj.cycle(6))


def test_classify_reports_traces_and_witnesses():
    verdict = gj.classify(gj.cycle(3), gj.cycle(4))
    assert verdict["strong"] is False
    assert verdict["weak"] is True
    assert verdict["cost_disjoint"] == []
    assert verdict["weak_witness"] is None
    procedures = [entry["procedure"] for entry in verdict["trace"]]
    assert "strong-rank" in procedures
    assert "weak-spectral" in procedures

    witness = verdict["strong_witness"]
    assert witness is not None
    report = gj.validate_joining_text(gj.cycle(3), gj.cycle(4), witness)
    assert report["valid"] and report["violations"] == []


def test_classify_with_cost():
    verdict = gj.classify(gj.path(2), gj.complete_bipartite(2, 2), PARITY)
    assert verdict["weak"] is False
    assert verdict["cost_disjoint"] == [True]


def test_product_joining_validates():
    g, h = gj.cycle(3), gj.path(2)
    report = gj.validate_joining_text(g, h, gj.product_joining_text(g, h))
    assert report["valid"]


def test_ogj_value_and_minimizer():
    g, h = gj.path(2), gj.complete_bipartite(2, 2)
    value, minimizer = gj.ogj(g, h, PARITY)
    assert value == "1/2"
    assert gj.validate_joining_text(g, h, minimizer)["valid"]


def test_factor_maps():
    c6, c3 = gj.cycle(6), gj.cycle(3)
    maps = gj.find_factor_maps(c6, c3)
    assert len(maps) == 6
    assert all(gj.verify_factor(c6, c3, phi) for phi in maps)
    assert gj.verify_factor(gj.cycle(4), gj.path(2), [0, 1, 0, 1])
    assert not gj.verify_factor(gj.cycle(6), gj.cycle(3), [0, 0, 1, 1, 2, 2])


def test_char_poly_rendering():
    assert gj.transition_char_poly(gj.path(2)) == "x^2 - 1"


def test_two_loop_normalizes():
    g = gj.two_loop("1/2", "1/3")
    assert g.degree("s0") == "3/5"
    assert g.degree("s1") == "2/5"


def test_simulate_is_deterministic():
    first = gj.simulate(gj.cycle(3), 2000, seed=7, tolerance="1/20")
    second = gj.simulate(gj.cycle(3), 2000, seed=7, tolerance="1/20")
    assert first == second
    assert len(first["path"]) == 2001
    assert first["stationary_tv"] == "26/2001"
    assert first["within_tolerance"] is True


def test_errors_are_typed():
    with pytest.raises(gj.GraphJoinError):
        gj.parse_graph("not a graph file")
    with pytest.raises(gj.GraphJoinError):
        gj.cycle(2)
