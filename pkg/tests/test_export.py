import json

import pytest

from compdual.export import (
    FIXTURES,
    compare_fixture,
    export_graph,
    from_json,
    load_fixture,
    to_dot,
    to_json,
    to_tikz,
)
from compdual.graphs import RankedGraph, build, build_Qc, build_Qct, build_Rc


def test_json_single_edge():
    assert json.loads(to_json(build_Rc(1))) == {
        "flavor": "graded", "max_rank": 1, "vertices": [[], [1]],
        "edges": [{"from": [], "to": [1], "mult": 1}],
    }


@pytest.mark.parametrize("name", ["rc", "lc", "qc", "qct"])
@pytest.mark.parametrize("N", [0, 3, 6])
def test_json_round_trip(name, N):
    G = build(name, N)
    assert from_json(to_json(G)) == G


def test_qct_flavor_in_json():
    assert json.loads(to_json(build_Qct(2)))["flavor"] == "strong-filtered"


def test_dot_edge_count():
    text = to_dot(build_Qc(4))
    assert sum("->" in line for line in text.splitlines()) == 22
    assert 'label="(1, 2, 1)"' in text


def test_dot_multiplicity_modes():
    base = build_Rc(2)
    G = RankedGraph("M", base.flavor, 2, base.vertices, {**base.edges, ((), (1,)): 3})
    assert to_dot(G).count("n0 -> n1;") == 3
    assert to_dot(G, simple_edges=True).count("n0 -> n1;") == 1
    assert 'n0 -> n1 [label="3"]' in to_dot(G, label_mult=True)


def test_tikz():
    text = to_tikz(build_Qc(4))
    assert "{${(1, 2, 1)}$}" in text
    assert text.count("\\node") == 16
    assert text.count("\\draw") == 22


def test_outputs_are_stable():
    for fmt in ("json", "dot", "tikz"):
        assert export_graph(build_Qct(5), fmt) == export_graph(build_Qct(5), fmt)


def test_unsupported_format():
    with pytest.raises(ValueError):
        export_graph(build_Rc(1), "png")


@pytest.mark.parametrize("name, count", [("Rc4", 17), ("Lc4", 17), ("Qc4", 22)])
def test_fixtures(name, count):
    f = load_fixture(name)
    assert len(f.edges) == count
    report = compare_fixture(build(FIXTURES[name], 4), f)
    assert report["passed"] and not report["missing"] and not report["extra"]


def test_fixture_mismatch_is_reported():
    report = compare_fixture(build("lc", 4), load_fixture("Rc4"))
    assert not report["passed"]
    assert ((2, 1), (1, 3)) in report["missing"]
    assert ((2, 1), (3, 1)) in report["extra"]


def test_fixture_needs_rank_four():
    with pytest.raises(ValueError):
        compare_fixture(build("rc", 3), load_fixture("Rc4"))
