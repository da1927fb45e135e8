"""Tests for the artin command-line interface."""

import json

import pytest
from click.testing import CliRunner

from artin_groups.cli.artin import cli


@pytest.fixture
def run(graphs_dir):
    runner = CliRunner()

    def invoke(*args):
        resolved = [str(graphs_dir / a) if a.endswith('.cox') else a for a in args]
        return runner.invoke(cli, resolved, obj={})

    return invoke


def as_json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_classify(run):
    data = as_json(run('--json', 'classify', 'a2_a1.cox'))
    assert data == {"components": [
        {"type": "A", "param": 2, "vertices": ["s1", "s2"]},
        {"type": "A", "param": 1, "vertices": ["t"]},
    ]}
    result = run('classify', 'h3.cox')
    assert result.exit_code == 0
    assert "H3" in result.output


def test_classify_non_spherical_exits_with_1(run):
    result = run('classify', 'triangle.cox')
    assert result.exit_code == 1
    assert "NonSphericalError" in result.output

    result = run('--json', 'classify', 'triangle.cox')
    assert result.exit_code == 1
    assert '"error": "NonSphericalError"' in result.output


def test_domain_errors_are_reported_once_on_stderr(run):
    result = run('classify', 'triangle.cox')
    assert result.exit_code == 1
    assert result.stdout == ""
    assert result.stderr.count("NonSphericalError") == 1

    result = run('--json', 'nf', 'a2.cox', 's x')
    assert result.exit_code == 1
    assert result.stdout == ""
    assert json.loads(result.stderr)["error"] == "UnknownGeneratorError"


def test_usage_errors_exit_with_2(run):
    assert run('classify').exit_code == 2
    assert run('classify', 'missing.cox').exit_code == 2
    assert run('verify', 'no-such-suite').exit_code == 2


def test_invariants(run):
    data = as_json(run('--json', 'invariants', 'a2_a1.cox'))
    assert (data["cd"], data["rkAb"], data["rkZ"]) == (3, 2, 2)
    assert "mf" not in data
    assert as_json(run('--json', 'invariants', 'd4.cox'))["mf"] == 3


def test_iso(run):
    data = as_json(run('--json', 'iso', 'b2.cox', 'i2_4.cox'))
    assert data["isomorphic"] is True
    data = as_json(run('--json', 'iso', 'd4.cox', 'b4.cox'))
    assert data["isomorphic"] is False
    assert "mf: 3 vs 4" in data["explanation"]
    assert data["rkZ"] == [1, 1]


def test_nf(run):
    data = as_json(run('--json', 'nf', 'a2.cox', 's t s t'))
    assert data == {
        "input": "s t s t", "positive": True, "k": 1, "canonical_length": 1, "factors": [["t"]], "word": "s t s t",
    }
    data = as_json(run('--json', 'nf', 'a2.cox', 's^-1'))
    assert (data["positive"], data["k"], data["factors"]) == (False, -1, [["s", "t"]])
    result = run('nf', 'a2.cox', 's t t s')
    assert result.exit_code == 0
    assert "canonical length 2" in result.stdout


def test_nf_rejects_unknown_generators(run):
    result = run('nf', 'a2.cox', 's x')
    assert result.exit_code == 1
    assert "UnknownGeneratorError" in result.output
    assert run('nf', 'a2.cox', 's^').exit_code == 1


def test_charney(run):
    data = as_json(run('--json', 'charney', 'a2.cox', 's^-1 t'))
    assert (data["b"], data["c"]) == ("t s", "s t")
    assert data["delta_form"] == {"k": 1, "p": "s t t"}


def test_eq(run):
    assert as_json(run('--json', 'eq', 'a2.cox', 's t s', 't s t')) == {"equal": True}
    assert as_json(run('--json', 'eq', 'a2.cox', 's', 't')) == {"equal": False}
    result = run('eq', 'b2.cox', 's t s t', 't s t s')
    assert result.exit_code == 0
    assert "true" in result.output


def test_delta(run):
    assert as_json(run('--json', 'delta', 'b2.cox')) == {"subset": ["s", "t"], "word": "s t s t", "length": 4}
    assert as_json(run('--json', 'delta', 'h3.cox', '--subset', 't r'))["length"] == 3


def test_mu(run):
    data = as_json(run('--json', 'mu', 'a2.cox'))
    assert data == {"mu": {"s": "t", "t": "s"}, "identity": False, "center_exponent": 2}
    data = as_json(run('--json', 'mu', 'a2_a1.cox'))
    assert "center_exponent" not in data


def test_power_check(run):
    data = as_json(run('--json', 'power-check', 'h3.cox', '--ordering', 'r s t'))
    assert data == {"ordering": ["r", "s", "t"], "holds": True, "h": 10, "center_exponent": 1, "exponent": 5}
    data = as_json(run('--json', 'power-check', 'a2.cox', '--ordering', 't s'))
    assert (data["holds"], data["h"], data["center_exponent"], data["exponent"]) == (True, 3, 2, 3)
    result = run('power-check', 'a2.cox')
    assert result.exit_code == 0
    assert "pi^3 = Delta^2" in result.stdout
    assert run('power-check', 'h3.cox', '--ordering', 's s t').exit_code == 1
    assert run('power-check', 'a2_a1.cox').exit_code == 1


def test_verify(run):
    data = as_json(run('--json', 'verify', 'example5', '--seed', '4'))
    assert data["passed"] is True
    assert data["seed"] == 4
    result = run('verify', 'example5')
    assert result.exit_code == 0
    assert "example5" in result.output


def test_verify_is_reproducible(run):
    first = run('--json', 'verify', 'iso', '--seed', '21')
    second = run('--json', 'verify', 'iso', '--seed', '21')
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


def table_rows(text):
    return [
        [cell.strip() for cell in line.strip().strip('│').split('│')]
        for line in text.splitlines() if line.startswith('│')
    ]


def flatten(text):
    return " ".join(text.replace('│', ' ').split())


def type_name(component):
    if component["type"] == "I2":
        return f"I2({component['param']})"
    return f"{component['type']}{component['param']}"


@pytest.mark.parametrize("graph", ['a2_a1.cox', 'h3.cox', 'd4.cox'])
def test_classify_text_matches_json(run, graph):
    data = as_json(run('--json', 'classify', graph))
    text = run('classify', graph)
    assert text.exit_code == 0
    expected = [[type_name(c), " ".join(c["vertices"])] for c in data["components"]]
    assert table_rows(text.stdout) == expected


@pytest.mark.parametrize("graph", ['a2_a1.cox', 'b4.cox', 'd4.cox'])
def test_invariants_text_matches_json(run, graph):
    data = as_json(run('--json', 'invariants', graph))
    text = run('invariants', graph)
    assert text.exit_code == 0
    expected = [
        [type_name(c), " ".join(c["vertices"]), str(c["cd"]), str(c["mf"]), str(c["rkAb"])]
        for c in data["components"]
    ]
    assert table_rows(text.stdout) == expected
    summary = f"cd = {data['cd']}, rkAb = {data['rkAb']}, rkZ = {data['rkZ']}"
    if "mf" in data:
        summary += f", mf = {data['mf']}"
    assert summary in text.stdout


@pytest.mark.parametrize("pair", [('b2.cox', 'i2_4.cox'), ('d4.cox', 'b4.cox'), ('a2_a1.cox', 'a2.cox')])
def test_iso_text_matches_json(run, pair):
    data = as_json(run('--json', 'iso', *pair))
    text = run('iso', *pair)
    assert text.exit_code == 0
    assert f"isomorphic: {str(data['isomorphic']).lower()}" in text.stdout
    assert flatten(data["explanation"]) in flatten(text.stdout)
