"""Command-line front end.

Subcommands:

    exact     exact connected-set count of base x P_n
    bound     locally-dense lower bound N_L, dominant eigenvalue, c-limit
    table     (n, count, c, bound, c_bound) series as CSV or JSON
    spectral  power-iteration diagnostics for the subset transfer matrix
    validate  cross-engine validation suite (quick or full)

The base graph comes from --family {path,cycle,complete,star,cylinder} with
-m, or from an edge-list file via --graph (``cylinder`` is an alias for
``cycle``: the product C_m x P_n is the cylindrical lattice).  Counts print
in full decimal on stdout; progress and engine provenance go to stderr.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import click

from . import __version__
from .cache import SequenceCache
from .engines import BaseFamily, base_graph, base_label, count_product
from .graphs import parse_edge_list
from .oracle import count_connected_sets, nth_root
from .tables import c_sequence, render_csv, render_json
from .transfer_bound import build_transfer_matrix, dominant_eigenvalue, lower_bound_count
from .validate import run_validation

_FAMILY_CHOICES = ("path", "cycle", "complete", "star", "cylinder")


def _resolve_base(family: str | None, order: int | None, graph_file: str | None):
    if (family is None) == (graph_file is None):
        raise click.UsageError("give exactly one of --family (with -m) or --graph")
    if graph_file is not None:
        try:
            return parse_edge_list(Path(graph_file).read_text(encoding="utf-8"))
        except ValueError as exc:
            raise click.ClickException(f"bad edge list {graph_file}: {exc}") from exc
    if order is None:
        raise click.UsageError("--family needs -m")
    kind = "cycle" if family == "cylinder" else family
    try:
        base = BaseFamily(kind, order)
        base.graph()  # validate the order eagerly
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    return base


def _make_cache(cache_dir: str | None, no_cache: bool) -> SequenceCache:
    return SequenceCache(directory=cache_dir, enabled=not no_cache)


@click.group()
@click.version_option(version=__version__)
def main():
    """Exact counting of connected sets in products of a graph with a path."""


@main.command()
@click.option("--family", type=click.Choice(_FAMILY_CHOICES), help="Base graph family.")
@click.option("-m", "order", type=int, help="Base graph order.")
@click.option("--graph", "graph_file", type=click.Path(exists=True, dir_okay=False),
              help="Base graph from an edge-list file.")
@click.option("-n", "length", type=int, required=True, help="Path factor length.")
@click.option("--engine", type=click.Choice(("auto", "profile-dp", "recurrence", "complete", "oracle")),
              default="auto", show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help="Cache directory (default: LATCOUNT_CACHE_DIR or ~/.cache/latcount).")
@click.option("--no-cache", is_flag=True, help="Disable the sequence cache.")
def exact(family, order, graph_file, length, engine, cache_dir, no_cache):
    """Print the exact connected-set count of base x P_n."""
    base = _resolve_base(family, order, graph_file)
    cache = _make_cache(cache_dir, no_cache)
    start = time.perf_counter()
    try:
        count, used = count_product(base, length, engine=engine, cache=cache)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(count)
    click.echo(
        f"engine: {used}{' (auto)' if engine == 'auto' else ''} | "
        f"base: {base_label(base)} | n: {length} | "
        f"wall: {time.perf_counter() - start:.3f}s",
        err=True,
    )


@main.command()
@click.option("--family", type=click.Choice(_FAMILY_CHOICES))
@click.option("-m", "order", type=int)
@click.option("--graph", "graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-n", "length", type=int, default=None,
              help="Also print the exact lower bound N_L for this n.")
def bound(family, order, graph_file, length):
    """Locally-dense lower bound: N_L, dominant eigenvalue, c-limit."""
    base = _resolve_base(family, order, graph_file)
    g = base_graph(base)
    try:
        a = build_transfer_matrix(g)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    est = dominant_eigenvalue(a)
    if not est.converged:
        click.echo(f"warning: power iteration did not converge (residual {est.residual:.2e})",
                   err=True)
    if length is not None:
        value = lower_bound_count(g, length)
        click.echo(f"N_L({base_label(base)} x P_{length}) = {value}")
        click.echo(f"c_bound = {nth_root(value, g.vertex_count * length):.6f}")
    click.echo(f"lambda = {est.eigenvalue:.6f}")
    click.echo(f"c_limit = {est.eigenvalue ** (1.0 / g.vertex_count):.6f}")


@main.command()
@click.option("--family", type=click.Choice(_FAMILY_CHOICES), required=True)
@click.option("-m", "order", type=int, required=True)
@click.option("--n-max", type=int, required=True, help="Largest path length n.")
@click.option("--format", "fmt", type=click.Choice(("csv", "json")), default="csv",
              show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@click.option("--no-cache", is_flag=True)
def table(family, order, n_max, fmt, cache_dir, no_cache):
    """Emit the (n, count, c, bound, c_bound) series for n = 1..n-max."""
    base = _resolve_base(family, order, None)
    cache = _make_cache(cache_dir, no_cache)
    try:
        result = c_sequence(base, n_max, method="both", cache=cache)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(render_csv(result) if fmt == "csv" else render_json(result), nl=False)


@main.command()
@click.option("--family", type=click.Choice(_FAMILY_CHOICES))
@click.option("-m", "order", type=int)
@click.option("--graph", "graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--max-iter", type=int, default=100_000, show_default=True)
def spectral(family, order, graph_file, tol, max_iter):
    """Power-iteration diagnostics for the subset transfer matrix."""
    base = _resolve_base(family, order, graph_file)
    g = base_graph(base)
    try:
        a = build_transfer_matrix(g)
        est = dominant_eigenvalue(a, tol=tol, max_iter=max_iter)
    except (ValueError, MemoryError) as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(f"base = {base_label(base)} (dim {a.dim})")
    click.echo(f"lambda = {est.eigenvalue:.12g}")
    click.echo(f"iterations = {est.iterations}")
    click.echo(f"residual = {est.residual:.3e}")
    click.echo(f"converged = {est.converged}")
    click.echo(f"c_limit = {est.eigenvalue ** (1.0 / g.vertex_count):.6f}")
    if not est.converged:
        sys.exit(1)


@main.command()
@click.option("--scope", type=click.Choice(("quick", "full")), default="quick",
              show_default=True)
def validate(scope):
    """Run the cross-engine validation suite; nonzero exit on any failure."""
    report = run_validation(scope)
    for verdict in report.verdicts:
        mark = "pass" if verdict.passed else "FAIL"
        suffix = f"  ({verdict.details})" if verdict.details and not verdict.passed else ""
        click.echo(f"[{mark}] {verdict.name}{suffix}")
    passed = sum(v.passed for v in report.verdicts)
    click.echo(
        f"{passed}/{len(report.verdicts)} checks passed in {report.wall_time:.1f}s "
        f"({report.command})"
    )
    if not report.ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
