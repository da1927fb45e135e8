"""Command-line interface for the Artin groups engine."""

import json
import sys
from typing import Any, Callable, Dict, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from ..coxeter.catalog import classification_report, require_type
from ..coxeter.graph import is_connected, load_graph
from ..errors import ArtinError
from ..garside.factory import get_garside_structure
from ..invariants.invariants import decide_iso, invariant_report
from ..utils.config import config
from ..utils.logging import get_logger, setup_logging
from ..verify.suites import suite_registry

logger = get_logger(__name__)
console = Console()
err_console = Console(stderr=True)

GRAPH_PATH = click.Path(exists=True, dir_okay=False)


@click.group()
@click.option('--config-file', '-c', type=click.Path(exists=True, dir_okay=False), help='Path to config file')
@click.option('--verbose', '-v', is_flag=True, help='Enable debug logging on stderr')
@click.option('--json', '-j', 'json_output', is_flag=True, help='Emit one JSON document on stdout')
@click.pass_context
def cli(ctx, config_file: Optional[str], verbose: bool, json_output: bool):
    """Spherical Artin groups: classification, invariants, normal forms and the word problem."""
    if config_file:
        config.reload(config_file)
    setup_logging(level='DEBUG' if verbose else config.log_level)

    ctx.ensure_object(dict)
    ctx.obj['json'] = json_output


def _run(ctx, action: Callable[[], Dict[str, Any]], render: Callable[[Dict[str, Any]], None]) -> Dict[str, Any]:
    """Run a library call and print its result; a domain error is reported once, on stderr, with exit 1."""
    try:
        result = action()
    except (ArtinError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        if ctx.obj.get('json'):
            click.echo(json.dumps({'error': type(e).__name__, 'message': str(e)}, indent=2), err=True)
        else:
            err_console.print(f"[red]{type(e).__name__}: {escape(str(e))}[/red]")
        ctx.exit(1)
    if ctx.obj.get('json'):
        click.echo(json.dumps(result, indent=2))
    else:
        render(result)
    return result


def _structure(path: str):
    return get_garside_structure(load_graph(path))


def _component_table(components) -> Table:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Type", style="cyan")
    table.add_column("Vertices")
    for key in ("cd", "mf", "rkAb"):
        if components and key in components[0]:
            table.add_column(key, justify="right")
    for comp in components:
        name = f"I2({comp['param']})" if comp['type'] == 'I2' else f"{comp['type']}{comp['param']}"
        row = [name, " ".join(comp['vertices'])]
        row += [str(comp[key]) for key in ("cd", "mf", "rkAb") if key in comp]
        table.add_row(*row)
    return table


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.pass_context
def classify(ctx, graph: str):
    """Classify every connected component of GRAPH."""
    _run(ctx, lambda: classification_report(load_graph(graph)),
         lambda r: console.print(_component_table(r['components'])))


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.pass_context
def invariants(ctx, graph: str):
    """Compute cd, mf, rkAb and rkZ."""
    def render(r):
        console.print(_component_table(r['components']))
        summary = f"cd = {r['cd']}, rkAb = {r['rkAb']}, rkZ = {r['rkZ']}"
        if 'mf' in r:
            summary += f", mf = {r['mf']}"
        console.print(summary)

    _run(ctx, lambda: invariant_report(load_graph(graph)), render)


@cli.command()
@click.argument('graph1', type=GRAPH_PATH)
@click.argument('graph2', type=GRAPH_PATH)
@click.pass_context
def iso(ctx, graph1: str, graph2: str):
    """Decide whether two spherical Artin groups are isomorphic."""
    def render(r):
        style = "green" if r['isomorphic'] else "red"
        console.print(Panel(r['explanation'], title=f"isomorphic: {str(r['isomorphic']).lower()}",
                            border_style=style))

    _run(ctx, lambda: decide_iso(load_graph(graph1), load_graph(graph2)).to_dict(), render)


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.argument('word')
@click.pass_context
def nf(ctx, graph: str, word: str):
    """Left-weighted normal form of WORD (group normal form if WORD has inverses)."""
    def action():
        G = _structure(graph)
        w = G.parse(word)
        form = G.normal_form(w) if w.is_positive() else G.group_normal_form(w)
        return {"input": str(w), "positive": w.is_positive(), **G.describe(form)}

    def render(r):
        console.print(f"Delta^{r['k']} " + " | ".join(" ".join(f) for f in r['factors']))
        console.print(f"canonical length {r['canonical_length']}")
        console.print(f"[dim]{r['word']}[/dim]")

    _run(ctx, action, render)


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.argument('word')
@click.pass_context
def charney(ctx, graph: str, word: str):
    """Charney form b c^-1 of WORD."""
    def action():
        G = _structure(graph)
        w = G.parse(word)
        form = G.delta_form(w)
        return {"input": str(w), **G.charney(w).to_dict(),
                "delta_form": {"k": form.k, "p": str(G.spell(form.p))}}

    _run(ctx, action, lambda r: console.print(f"b = {r['b']}\nc = {r['c']}"))


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.argument('word1')
@click.argument('word2')
@click.pass_context
def eq(ctx, graph: str, word1: str, word2: str):
    """Whether WORD1 and WORD2 represent the same element."""
    def action():
        G = _structure(graph)
        return {"equal": G.equals(G.parse(word1), G.parse(word2))}

    _run(ctx, action, lambda r: console.print(str(r['equal']).lower()))


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.option('--subset', '-s', help='Space-separated generators X for Delta_X')
@click.pass_context
def delta(ctx, graph: str, subset: Optional[str]):
    """Fundamental element Delta (or Delta_X)."""
    def action():
        G = _structure(graph)
        names = subset.split() if subset else list(G.generators)
        element = G.fundamental_element(names)
        return {"subset": names, "word": str(G.simple_word(element)), "length": G.rs.length(element)}

    _run(ctx, action, lambda r: console.print(f"{r['word']}  (length {r['length']})"))


@cli.command()
@click.argument('graph', type=GRAPH_PATH)
@click.pass_context
def mu(ctx, graph: str):
    """The involution mu with Delta s = mu(s) Delta."""
    def action():
        G = _structure(graph)
        result = {"mu": {s: G.mu_map(s) for s in G.generators}, "identity": G.mu_is_identity()}
        if is_connected(G.graph):
            result["center_exponent"] = G.center_generator()
        return result

    def render(r):
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("s", style="cyan")
        table.add_column("mu(s)")
        for s, image in r['mu'].items():
            table.add_row(s, image)
        console.print(table)
        if 'center_exponent' in r:
            console.print(f"center generated by Delta^{r['center_exponent']}")

    _run(ctx, action, render)


@cli.command('power-check')
@click.argument('graph', type=GRAPH_PATH)
@click.option('--ordering', '-o', help='Space-separated generator order of the Coxeter element')
@click.pass_context
def power_check(ctx, graph: str, ordering: Optional[str]):
    """Check pi^(h/2) = Delta (mu = Id) or pi^h = Delta^2."""
    def action():
        G = _structure(graph)
        order = ordering.split() if ordering else list(G.generators)
        holds = G.power_check_coxeter_element(order)
        result = {
            "ordering": order,
            "holds": holds,
            "h": require_type(G.graph).coxeter_number,
            "center_exponent": G.center_generator(),
        }
        if holds:
            result["exponent"] = G.coxeter_element_power(order)
        return result

    def render(r):
        verdict = "[green]holds[/green]" if r['holds'] else "[red]fails[/red]"
        console.print(f"pi = {' '.join(r['ordering'])}: {verdict}")
        if 'exponent' in r:
            console.print(f"pi^{r['exponent']} = Delta^{r['center_exponent']}")

    _run(ctx, action, render)


@cli.command()
@click.argument('suite', type=click.Choice(suite_registry.list_suites()))
@click.option('--seed', type=int, help='Random seed (default: verify.seed)')
@click.pass_context
def verify(ctx, suite: str, seed: Optional[int]):
    """Run a verification suite."""
    json_output = ctx.obj.get('json')
    progress = not json_output and sys.stderr.isatty()

    def render(r):
        table = Table(title=f"{r['suite']} (seed {r['seed']})", show_header=True, header_style="bold magenta")
        table.add_column("Check", style="cyan")
        table.add_column("Result")
        table.add_column("Detail")
        for check in r['checks']:
            result = "[green]pass[/green]" if check['passed'] else "[red]FAIL[/red]"
            detail = check['detail']
            if 'counterexample' in check:
                detail += f"\n{check['counterexample']}"
            table.add_row(check['name'], result, detail)
        console.print(table)

    report = _run(ctx, lambda: suite_registry.run(suite, seed=seed, progress=progress).to_dict(), render)
    if not report['passed']:
        ctx.exit(1)


def main():
    """Main entry point."""
    cli(obj={})


if __name__ == '__main__':
    main()
