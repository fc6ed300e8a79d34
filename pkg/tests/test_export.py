import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

import dotcheck
from conftest import incidences, make_context
from fcakit import (
    DiagramOptions,
    FormalContext,
    build_lattice,
    derive_attributes,
    derive_objects,
    to_dot,
    to_json,
)


def test_dotcheck_rejects_garbage():
    with pytest.raises(ValueError):
        dotcheck.parse("digraph { 0 -> ; }")
    with pytest.raises(ValueError):
        dotcheck.parse("graph { }")


def test_options_validated():
    with pytest.raises(ValueError):
        DiagramOptions(labeling="fancy")
    with pytest.raises(ValueError):
        DiagramOptions(rank_direction="TB")


def test_single_concept_dot():
    ctx = make_context(np.ones((2, 2)))
    graph, nodes, edges = dotcheck.parse(to_dot(build_lattice(ctx), ctx))
    assert list(nodes) == ["0"] and edges == []
    assert graph["rankdir"] == "BT"


def test_diagonal_dot(diagonal):
    lat = build_lattice(diagonal)
    _, nodes, edges = dotcheck.parse(to_dot(lat, diagonal))
    assert len(nodes) == 4
    assert sorted(edges) == [("1", "0"), ("2", "0"), ("3", "1"), ("3", "2")]
    assert nodes["0"]["label"] == "g1 g2\n∅"


def test_diagonal_reduced_labels(diagonal):
    lat = build_lattice(diagonal)
    _, nodes, _ = dotcheck.parse(to_dot(lat, diagonal, DiagramOptions("reduced")))
    assert nodes["1"]["label"] == "m2\ng2"
    assert nodes["2"]["label"] == "m1\ng1"
    assert nodes["0"]["label"] == "" and nodes["3"]["label"] == ""


def test_label_escaping():
    ctx = FormalContext(['say "hi"'], ["back\\slash"], [[True]])
    text = to_dot(build_lattice(ctx), ctx)
    _, nodes, _ = dotcheck.parse(text)
    assert nodes["0"]["label"] == 'say "hi"\nback\\slash'


def test_crime_dot_edges_are_transitive_reduction(crime):
    lat = build_lattice(crime)
    _, nodes, edges = dotcheck.parse(to_dot(lat, crime))
    assert len(nodes) == len(lat)
    g = nx.DiGraph((int(a), int(b)) for a, b in edges)
    assert nx.is_directed_acyclic_graph(g)
    n = len(lat)
    order = nx.DiGraph((i, j) for i in range(n) for j in range(n) if i != j and lat.leq_index(i, j))
    assert set(g.edges()) == set(nx.transitive_reduction(order).edges())


def test_reduced_labels_partition_names(crime):
    lat = build_lattice(crime)
    _, nodes, _ = dotcheck.parse(to_dot(lat, crime, DiagramOptions("reduced")))
    seen = []
    for attrs in nodes.values():
        for line in attrs["label"].split("\n"):
            seen.extend(line.split())
    assert sorted(seen) == sorted(crime.object_names + crime.attribute_names)


def test_json_empty_incidence():
    ctx = make_context(np.zeros((2, 2)))
    data = json.loads(to_json(build_lattice(ctx), ctx))
    assert list(data) == ["objects", "attributes", "concepts", "covers"]
    assert len(data["concepts"]) == 2
    assert data["covers"] == [[1, 0]]


def test_json_crime_contains_event_seven_concept(crime):
    data = json.loads(to_json(build_lattice(crime), crime))
    intents = [c["intent"] for c in data["concepts"]]
    assert ["c", "d", "g", "P5", "P7", "P8"] in intents


@settings(max_examples=100, deadline=None)
@given(incidences(max_objects=6, max_attributes=6))
def test_json_roundtrip_rederivation(inc):
    ctx = make_context(inc)
    data = json.loads(to_json(build_lattice(ctx), ctx))
    for c in data["concepts"]:
        extent = ctx.objects(c["extent"])
        assert ctx.attribute_labels(derive_objects(ctx, extent)) == c["intent"]
        assert ctx.object_labels(derive_attributes(ctx, ctx.attributes(c["intent"]))) == c["extent"]


def test_output_is_deterministic(crime):
    lat1, lat2 = build_lattice(crime), build_lattice(crime)
    assert to_json(lat1, crime) == to_json(lat2, crime)
    assert to_dot(lat1, crime) == to_dot(lat2, crime)
    assert to_dot(lat1, crime, DiagramOptions("reduced")) == to_dot(lat2, crime, DiagramOptions("reduced"))
