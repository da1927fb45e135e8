"""Tests for root systems and the permutation representation of W."""

import copy
import random

import pytest

from artin_groups.coxeter.catalog import TypeID, catalog_graph
from artin_groups.coxeter.graph import parse_graph
from artin_groups.coxeter.group import build_root_system
from artin_groups.errors import FieldError, NonSphericalError
from artin_groups.garside.factory import get_garside_structure
from artin_groups.utils.config import config


def rs_of(type_name):
    return build_root_system(catalog_graph(TypeID.parse(type_name)))


@pytest.fixture
def a2():
    return build_root_system(parse_graph("vertices s t\nedge s t 3\n"))


@pytest.mark.parametrize("type_name, roots", [
    ('A1', 2), ('A2', 6), ('A3', 12), ('A4', 20), ('B2', 8), ('B3', 18), ('B4', 32), ('D4', 24),
    ('D5', 40), ('F4', 48), ('H3', 30), ('H4', 120), ('E6', 72), ('E7', 126), ('E8', 240),
    ('I2(5)', 10), ('I2(7)', 14), ('I2(12)', 24),
])
def test_root_counts(type_name, roots):
    rs = rs_of(type_name)
    assert len(rs.roots) == roots
    assert rs.positive_count * 2 == roots


@pytest.mark.parametrize("type_name", ['A3', 'B3', 'D4', 'F4', 'H3', 'I2(5)', 'E6'])
def test_longest_element_length(type_name):
    t = TypeID.parse(type_name)
    rs = rs_of(type_name)
    assert rs.length(rs.w0) == t.rank * t.coxeter_number // 2
    assert rs.length(rs.w0) == rs.positive_count
    assert rs.w0 * rs.w0 == rs.identity


def test_disconnected_root_system():
    rs = build_root_system(parse_graph("vertices a b\n"))
    assert len(rs.roots) == 4
    assert rs.length(rs.w0) == 2


def test_words_and_lengths(a2):
    assert a2.from_word([]) == a2.identity
    assert a2.from_word(['s', 's']) == a2.identity
    assert a2.from_word(['s', 't', 's']) == a2.from_word(['t', 's', 't'])
    assert a2.length(a2.from_word(['s', 't', 's', 't'])) == 2
    assert a2.reduced_word(a2.w0) == ['s', 't', 's']
    assert a2.reduced_word(a2.from_word(['t', 's'])) == ['t', 's']


def test_descents(a2):
    st = a2.from_word(['s', 't'])
    assert a2.descents(st, 'left') == frozenset({'s'})
    assert a2.descents(st, 'right') == frozenset({'t'})
    assert a2.descents(a2.w0) == frozenset({'s', 't'})
    with pytest.raises(ValueError):
        a2.descents(st, 'middle')


def test_weak_orders(a2):
    s, st, ts = (a2.from_word(w) for w in (['s'], ['s', 't'], ['t', 's']))
    assert a2.prefix_le(s, st)
    assert not a2.prefix_le(s, ts)
    assert a2.suffix_le(s, ts)
    assert not a2.suffix_le(s, st)
    assert a2.prefix_le(a2.identity, a2.w0)


def test_parabolic_longest_elements():
    rs = rs_of('B3')
    assert rs.longest_element(['s1']) == rs.generator('s1')
    assert rs.length(rs.longest_element(['s2', 's3'])) == 4
    assert rs.length(rs.longest_element(['s1', 's3'])) == 2
    assert rs.longest_element() == rs.w0


@pytest.mark.parametrize("type_name, mu", [
    ('A2', (1, 0)), ('B2', (0, 1)), ('A3', (2, 1, 0)), ('D4', (0, 1, 2, 3)), ('D5', (0, 1, 2, 4, 3)),
    ('I2(5)', (1, 0)), ('I2(6)', (0, 1)),
])
def test_mu_indices(type_name, mu):
    assert rs_of(type_name).mu_indices == mu


def test_generators_negate_their_own_root():
    rs = rs_of('H3')
    P = rs.positive_count
    for i, g in enumerate(rs.simple_perms):
        assert g(i) == i + P
        assert g * g == rs.identity
        for r in range(2 * P):
            assert g(rs.negation(r)) == rs.negation(g(r))


def test_reduced_word_round_trip():
    rs = rs_of('B3')
    elements = rs.enumerate_elements()
    assert len(elements) == 48
    for w in random.Random(7).sample(elements, 30):
        word = rs.reduced_word(w)
        assert len(word) == rs.length(w)
        assert rs.from_word(word) == w


def test_group_orders():
    assert len(rs_of('A3').enumerate_elements()) == 24
    assert len(rs_of('H3').enumerate_elements()) == 120
    assert len(rs_of('I2(7)').enumerate_elements()) == 14
    with pytest.raises(ValueError):
        rs_of('F4').enumerate_elements(limit=100)


def test_conjugate_and_inverse(a2):
    s, t = a2.generator('s'), a2.generator('t')
    assert a2.conjugate(s, a2.w0) == t
    st = s * t
    assert st * st.inverse() == a2.identity


def test_non_spherical_graph_is_rejected():
    with pytest.raises(NonSphericalError):
        build_root_system(parse_graph("vertices a b c\nedge a b 3\nedge b c 3\nedge a c 3\n"))


def test_impractical_labels_are_rejected():
    with pytest.raises(FieldError):
        build_root_system(parse_graph("vertices a b\nedge a b 1009\n"))


@pytest.mark.parametrize("type_name", ['A4', 'B4', 'D4', 'H3', 'I2(12)'])
def test_w0_is_the_only_element_with_full_left_descent(type_name):
    rs = rs_of(type_name)
    full = frozenset(rs.generators)
    maximal = [w for w in rs.enumerate_elements() if rs.descents(w, 'left') == full]
    assert maximal == [rs.w0]


@pytest.mark.parametrize("type_name", ['A4', 'B4', 'D4', 'H3', 'F4'])
def test_length_is_inversion_invariant(type_name):
    rs = rs_of(type_name)
    rng = random.Random(type_name)
    for _ in range(100):
        w = rs.from_word(rng.choice(rs.generators) for _ in range(rng.randint(0, 30)))
        assert rs.length(w) == rs.length(w.inverse())


def test_degree_bound_is_part_of_the_cache_key(monkeypatch):
    graph = parse_graph("vertices a b\nedge a b 7\n")
    assert build_root_system(graph).ctx.degree == 6

    monkeypatch.setattr(config, '_config', copy.deepcopy(config._config))
    config.set('field.max_degree', 5)
    with pytest.raises(FieldError):
        build_root_system(graph)
    with pytest.raises(FieldError):
        get_garside_structure(graph)
    assert build_root_system(graph, max_degree=6).ctx.degree == 6
