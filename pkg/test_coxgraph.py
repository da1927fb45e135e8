"""Tests for Coxeter graphs, the text format and classification."""

import pytest

from artin_groups.coxeter.catalog import (
    TypeID, catalog_graph, classification_report, classify, coxeter_number, graphs_equal,
    mu_is_identity, spherical_catalog, spherical_components,
)
from artin_groups.coxeter.graph import (
    INFINITY, CoxeterGraph, components, is_connected, load_graph, odd_component_count, parse_graph,
)
from artin_groups.errors import DisconnectedGraphError, GraphParseError, NonSphericalError


def test_parse_defaults_and_labels():
    g = parse_graph("# a comment\n\nvertices a b c\nedge a b 5\nedge b c inf\n")
    assert g.vertices == ('a', 'b', 'c')
    assert g.m('a', 'b') == 5
    assert g.m('b', 'a') == 5
    assert g.m('a', 'c') == 2
    assert g.m('b', 'c') == INFINITY
    assert g.m('a', 'a') == 1


@pytest.mark.parametrize("text, line, column", [
    ("edge a b 3\n", 1, 1),
    ("vertices a b\nedge a c 3\n", 2, 8),
    ("vertices a b\nedge a b 2\n", 2, 10),
    ("vertices a b\nedge a b x\n", 2, 10),
    ("vertices a b\nedge a b 3\nedge b a 4\n", 3, 1),
    ("vertices a a\n", 1, 12),
    ("vertices a\nvertices b\n", 2, 1),
    ("vertices a b\nloop a\n", 2, 1),
    ("vertices a b\nedge a a 3\n", 2, 8),
    ("vertices 1a\n", 1, 10),
    ("# only a comment\n", 2, 1),
])
def test_parse_errors_report_position(text, line, column):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_text_format_round_trip():
    g = parse_graph("vertices s t r u\nedge s t 3\nedge t r 4\nedge r u inf\n")
    assert parse_graph(g.to_text()) == g


def test_load_graph(graphs_dir):
    g = load_graph(graphs_dir / 'h3.cox')
    assert classify(g) == TypeID('H', 3)


def test_components_and_connectivity():
    g = parse_graph("vertices b a c\nedge b c 3\n")
    parts = components(g)
    assert [p.vertices for p in parts] == [('a',), ('b', 'c')]
    assert not is_connected(g)
    assert is_connected(parts[1])


@pytest.mark.parametrize("type_name, count", [
    ('A1', 1), ('A2', 1), ('B2', 2), ('B3', 2), ('F4', 2), ('D4', 1), ('I2(5)', 1), ('I2(6)', 2), ('H3', 1),
])
def test_odd_component_count(type_name, count):
    assert odd_component_count(catalog_graph(TypeID.parse(type_name))) == count


def test_classify_examples():
    assert classify(parse_graph("vertices a b c d\nedge a b 3\nedge b c 3\nedge c d 3\n")) == TypeID('A', 4)
    assert classify(parse_graph("vertices a b\nedge a b 7\n")) == TypeID('I2', 7)
    assert classify(parse_graph("vertices a b\nedge a b 3\n")) == TypeID('A', 2)
    assert classify(parse_graph("vertices a b\nedge a b inf\n")) is None
    assert classify(parse_graph("vertices a b c\nedge a b 3\nedge b c 3\nedge a c 3\n")) is None
    assert classify(parse_graph("vertices a b c\nedge a b 6\nedge b c 3\n")) is None
    assert classify(parse_graph("vertices a b c d\nedge a b 4\nedge b c 3\nedge c d 4\n")) is None


def test_classify_needs_connected_graph():
    with pytest.raises(DisconnectedGraphError):
        classify(parse_graph("vertices a b\n"))


def test_non_spherical_component_is_reported(graphs_dir):
    with pytest.raises(NonSphericalError) as info:
        spherical_components(load_graph(graphs_dir / 'triangle.cox'))
    assert len(info.value.vertices) == 3


@pytest.mark.parametrize("t", spherical_catalog(max_rank=5, dihedral=(5, 12))
                         + [TypeID('E', 6), TypeID('E', 7), TypeID('E', 8), TypeID('D', 6), TypeID('A', 8)])
def test_catalog_graphs_classify_to_themselves(t):
    g = catalog_graph(t)
    assert classify(g) == t
    shuffled = g.rename({v: f"v{i}" for i, v in enumerate(reversed(g.vertices))}).reorder(
        [f"v{i}" for i in range(g.rank)]
    )
    assert classify(shuffled) == t


def test_type_ids():
    assert TypeID.of('I2', 3) == TypeID('A', 2)
    assert TypeID.of('I2', 4) == TypeID('B', 2)
    assert TypeID.parse('G2') == TypeID('I2', 6)
    assert TypeID.parse('I2(5)').name == 'I2(5)'
    assert str(TypeID.parse('E7')) == 'E7'
    for bad in (('E', 5), ('D', 3), ('I2', 4), ('Z', 1)):
        with pytest.raises(ValueError):
            TypeID(*bad)
    with pytest.raises(ValueError):
        TypeID.parse('X9')


@pytest.mark.parametrize("type_name, h", [
    ('A1', 2), ('A2', 3), ('B3', 6), ('D4', 6), ('D5', 8), ('E6', 12), ('E7', 18), ('E8', 30),
    ('F4', 12), ('H3', 10), ('H4', 30), ('I2(9)', 9),
])
def test_coxeter_number(type_name, h):
    assert coxeter_number(TypeID.parse(type_name)) == h


@pytest.mark.parametrize("type_name, fixed", [
    ('A1', True), ('A3', False), ('B4', True), ('D4', True), ('D5', False), ('E6', False),
    ('E7', True), ('F4', True), ('H3', True), ('I2(5)', False), ('I2(8)', True),
])
def test_mu_is_identity(type_name, fixed):
    assert mu_is_identity(TypeID.parse(type_name)) == fixed


def test_graphs_equal():
    b2 = parse_graph("vertices s t\nedge s t 4\n")
    i2_4 = parse_graph("vertices a b\nedge a b 4\n")
    a2_a1 = parse_graph("vertices s1 s2 t\nedge s1 s2 3\n")
    a1_a2 = parse_graph("vertices x y z\nedge y z 3\n")
    assert graphs_equal(b2, i2_4)
    assert graphs_equal(a2_a1, a1_a2)
    assert not graphs_equal(b2, parse_graph("vertices s t\nedge s t 3\n"))


def odd_components_by_union_find(g):
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, t, m in g.edges:
        if m != INFINITY and m % 2 == 1:
            parent[find(s)] = find(t)
    return len({find(v) for v in g.vertices})


def prefixed(g, prefix):
    return g.rename({v: f"{prefix}{v}" for v in g.vertices})


@pytest.mark.parametrize("t", spherical_catalog(max_rank=6, dihedral=(5, 12)), ids=str)
def test_odd_component_count_agrees_with_union_find(t):
    g = catalog_graph(t)
    assert odd_component_count(g) == odd_components_by_union_find(g)


def test_odd_component_count_on_mixed_graphs():
    g = parse_graph("vertices a b c d e\nedge a b 3\nedge b c 4\nedge c d 5\nedge d e inf\n")
    assert odd_component_count(g) == odd_components_by_union_find(g) == 3
    union = prefixed(catalog_graph(TypeID.parse('B3')), 'x').disjoint_union(
        prefixed(catalog_graph(TypeID.parse('I2(7)')), 'y'))
    assert odd_component_count(union) == odd_components_by_union_find(union) == 3


def test_graphs_equal_is_an_equivalence_relation():
    graphs = []
    for name in ('A2', 'B2', 'I2(6)', 'A3', 'B3'):
        g = catalog_graph(TypeID.parse(name))
        graphs.append(g)
        graphs.append(prefixed(g, 'r').reorder(reversed(prefixed(g, 'r').vertices)))
    square = parse_graph("vertices u v\nedge u v 4\n")
    graphs.append(square)
    a1 = catalog_graph(TypeID.parse('A1'))
    a2 = catalog_graph(TypeID.parse('A2'))
    graphs.append(prefixed(a2, 'x').disjoint_union(prefixed(a1, 'y')))
    graphs.append(prefixed(a1, 'y').disjoint_union(prefixed(a2, 'x')))
    graphs.append(prefixed(a1, 'p').disjoint_union(prefixed(a1, 'q')).disjoint_union(prefixed(a1, 'r')))

    n = len(graphs)
    equal = [[graphs_equal(g, h) for h in graphs] for g in graphs]
    for i in range(n):
        assert equal[i][i]
        for j in range(n):
            assert equal[i][j] == equal[j][i]
            for k in range(n):
                if equal[i][j] and equal[j][k]:
                    assert equal[i][k]
    assert graphs_equal(graphs[2], square)
    assert graphs_equal(graphs[-2], graphs[-3])
    assert not graphs_equal(graphs[0], graphs[-1])


def test_classification_report(graphs_dir):
    report = classification_report(load_graph(graphs_dir / 'a2_a1.cox'))
    assert report == {"components": [
        {"type": "A", "param": 2, "vertices": ["s1", "s2"]},
        {"type": "A", "param": 1, "vertices": ["t"]},
    ]}


def test_graph_model_validation():
    with pytest.raises(ValueError):
        CoxeterGraph(vertices=('a', 'a'))
    with pytest.raises(ValueError):
        CoxeterGraph(vertices=('a', 'b'), edges=(('a', 'b', 1),))
    g = CoxeterGraph(vertices=('a', 'b'), edges=(('b', 'a', 3), ('a', 'b', 2)))
    assert g.edges == (('a', 'b', 3),)
    assert g.field_modulus() == 6
