"""Command-line interface: the full pipeline without the UI.

Subcommands wrap ingestion, graph building, clustering, time-diff analysis,
and the HTTP server. Graph files use the same JSON format as the service,
so a build+cluster run reproduces a service response bit for bit.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from . import analytics
from .builder import GraphParams, build_graph, dumps_canonical, graph_from_dict, graph_to_dict
from .clustering import DEFAULT_ITERATIONS, apply_clustering, chinese_whispers
from .errors import SenseGraphError
from .store import Store

DEFAULT_N = 100
DEFAULT_D = 20
CONFIG_KEYS = ("data_dir", "corpus", "n", "d", "variant", "iterations", "format")


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    config = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise click.ClickException(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise click.ClickException(f"{path}:{lineno}: unknown key {key!r}")
        config[key] = value
    return config


def _write_output(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


@click.group()
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key=value file with defaults (data_dir, corpus, n, d, variant, iterations, format).")
@click.pass_context
def main(ctx, config):
    """Temporal sense-graph engine: build, cluster, and analyse
    neighbourhood graphs over time from time-sliced thesaurus data."""
    ctx.obj = _load_config(config)


@main.command()
@click.argument("source", type=click.Path(exists=True, file_okay=False))
@click.option("--corpus-id", default=None, help="Corpus id (default: source directory name).")
@click.option("--name", default=None, help="Display name.")
@click.option("--data-dir", default=None, help="Data directory to write the normalized corpus into.")
@click.pass_context
def ingest(ctx, source, corpus_id, name, data_dir):
    """Validate a corpus directory and register it in the data directory."""
    data_dir = data_dir or ctx.obj.get("data_dir")
    if not data_dir:
        raise click.ClickException("--data-dir is required (or set data_dir in the config)")
    corpus_id = corpus_id or Path(source).resolve().name
    try:
        store = Store(data_dir)
        handle = store.ingest(source, corpus_id, name)
    except SenseGraphError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"ingested {handle.corpus_id!r}: {handle.interval_count} intervals")


def _intervals_option(corpus, intervals: str | None, i: int | None) -> tuple[int, ...]:
    if intervals and i:
        raise click.ClickException("--intervals and --i are mutually exclusive")
    if intervals:
        try:
            return tuple(int(part) for part in intervals.split(","))
        except ValueError:
            raise click.ClickException(f"--intervals must be comma-separated indices, got {intervals!r}")
    all_indices = corpus.interval_indices
    if i:
        return tuple(all_indices[:i])
    return tuple(all_indices)


@main.command()
@click.option("--data-dir", default=None)
@click.option("--corpus", default=None, help="Corpus id.")
@click.option("--target", required=True, help="Target word (e.g. 'rock/NN').")
@click.option("--variant", type=click.Choice(["interval", "dynamic", "global"]), default=None)
@click.option("--n", type=int, default=None, help="Neighbour nodes per selection step.")
@click.option("--d", type=int, default=None, help="Density parameter.")
@click.option("--intervals", default=None, help="Comma-separated interval indices (default: all).")
@click.option("--i", "i", type=int, default=None, help="Shorthand: use the first I intervals.")
@click.option("--output", "-o", default=None, help="Output file (default: stdout).")
@click.pass_context
def build(ctx, data_dir, corpus, target, variant, n, d, intervals, i, output):
    """Build the neighbourhood graph over time for a target word."""
    cfg = ctx.obj
    data_dir = data_dir or cfg.get("data_dir")
    corpus_id = corpus or cfg.get("corpus")
    if not data_dir or not corpus_id:
        raise click.ClickException("--data-dir and --corpus are required (or set them in the config)")
    try:
        snapshot = Store(data_dir).corpus(corpus_id)
        params = GraphParams(
            target=target,
            variant=variant or cfg.get("variant", "interval"),
            n=n if n is not None else int(cfg.get("n", DEFAULT_N)),
            d=d if d is not None else int(cfg.get("d", DEFAULT_D)),
            intervals=_intervals_option(snapshot, intervals, i),
        )
        graph = build_graph(snapshot, params)
    except SenseGraphError as exc:
        raise click.ClickException(str(exc))
    for warning in graph.warnings:
        click.echo(f"warning: {warning}", err=True)
    _write_output(dumps_canonical(graph_to_dict(graph)), output)


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=None, help="RNG seed (default: random, echoed in the output).")
@click.option("--iterations", type=int, default=None)
@click.option("--output", "-o", default=None)
@click.pass_context
def cluster(ctx, graph_file, seed, iterations, output):
    """Cluster a built graph file and annotate centrality."""
    if iterations is None:
        iterations = int(ctx.obj.get("iterations", DEFAULT_ITERATIONS))
    try:
        graph = graph_from_dict(json.loads(Path(graph_file).read_text(encoding="utf-8")))
        clustering = chinese_whispers(graph, iterations, seed)
        apply_clustering(graph, clustering)
        analytics.annotate_centrality(graph)
    except (SenseGraphError, ValueError, KeyError) as exc:
        raise click.ClickException(f"{graph_file}: {exc}")
    _write_output(dumps_canonical(graph_to_dict(graph, clustering)), output)


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--reference", type=int, required=True, help="Reference interval index.")
@click.option("--format", "fmt", type=click.Choice(["json", "tsv"]), default=None)
@click.option("--output", "-o", default=None)
@click.pass_context
def timediff(ctx, graph_file, reference, fmt, output):
    """Categorize the nodes of a graph file relative to a reference interval."""
    fmt = fmt or ctx.obj.get("format", "json")
    try:
        graph = graph_from_dict(json.loads(Path(graph_file).read_text(encoding="utf-8")))
        report = analytics.time_diff(graph, reference)
    except (SenseGraphError, ValueError, KeyError) as exc:
        raise click.ClickException(f"{graph_file}: {exc}")
    if fmt == "tsv":
        lines = [f"{word}\t{category}" for word, category in sorted(report.category_by_word.items())]
        _write_output("\n".join(lines), output)
    else:
        _write_output(dumps_canonical(report.to_json()), output)


@main.command()
@click.option("--data-dir", default=None)
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8040)
@click.option("--ui-dir", default=None, help="Directory with the built web UI, served at /ui.")
@click.pass_context
def serve(ctx, data_dir, host, port, ui_dir):
    """Run the HTTP service."""
    import os

    import uvicorn

    from .api import create_app

    data_dir = data_dir or ctx.obj.get("data_dir")
    if not data_dir:
        raise click.ClickException("--data-dir is required (or set data_dir in the config)")
    if ui_dir:
        os.environ["SENSEGRAPH_UI"] = ui_dir
    app = create_app(data_dir=data_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
