"""Command line entry point: ``rmplan run | sweep | presets``."""

from __future__ import annotations

import dataclasses
import json
import logging
import sys

import click

from .experiments import run_scenario, run_seed_sweep
from .planner import ALGORITHMS
from .scenario import PRESETS, ScenarioError, load_scenario

EXIT_VALIDATION = 1
EXIT_PLANNING = 2


def _parse_algos(value):
    if value is None:
        return None
    if value == "all":
        return ALGORITHMS
    algos = tuple(a.strip() for a in value.split(",") if a.strip())
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise ScenarioError(f"--algo: unknown {unknown}; choose from {', '.join(ALGORITHMS)} or 'all'")
    return algos


def _parse_seeds(value: str):
    try:
        if "," in value:
            return [int(s) for s in value.split(",") if s.strip()]
        count = int(value)
    except ValueError:
        raise ScenarioError(f"--seeds: expected a count or comma-separated list, got {value!r}") from None
    if count < 1:
        raise ScenarioError("--seeds: count must be >= 1")
    return list(range(count))


def _resolve(scenario, algo, samples, seed, gauss_points, knn):
    sc = load_scenario(scenario)
    overrides = {}
    if algo is not None:
        overrides["algorithms"] = _parse_algos(algo)
    if samples is not None:
        overrides["samples"] = samples
    if seed is not None:
        overrides["seed"] = seed
    if gauss_points is not None:
        overrides["gauss_points"] = gauss_points
    if knn is not None:
        overrides["knn"] = knn
    return dataclasses.replace(sc, **overrides) if overrides else sc


def _scenario_options(f):
    opts = [
        click.option("--scenario", required=True, help="Preset name or path to a JSON scenario file."),
        click.option("--algo", default=None, help="Comma-separated algorithms or 'all'."),
        click.option("--samples", type=int, default=None, help="Total node count including start and goal."),
        click.option("--gauss-points", type=int, default=None, help="Gauss-Legendre order per edge."),
        click.option("--knn", type=int, default=None, help="Prune to k nearest planar neighbours."),
        click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None, help="Output directory."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


@click.group()
@click.option("-v", "--verbose", is_flag=True)
def cli(verbose):
    """Shortest paths on height surfaces via the pulled-back Riemannian metric."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@_scenario_options
@click.option("--seed", type=int, default=None)
def run(scenario, algo, samples, gauss_points, knn, out_dir, seed):
    """Plan once on a single sampled roadmap."""
    sc = _resolve(scenario, algo, samples, seed, gauss_points, knn)
    summary = run_scenario(sc, out_dir)
    for name, rec in summary.records.items():
        if rec["status"] == "ok":
            click.echo(f"{name:16s} edge_cost={rec['edge_cost_total']:.6f} "
                       f"surface_length={rec['surface_length']:.6f} nodes={rec['path_node_count']}")
        else:
            click.echo(f"{name:16s} FAILED: {rec['reason']}")
    if summary.all_failed:
        sys.exit(EXIT_PLANNING)


@cli.command()
@_scenario_options
@click.option("--seeds", default="10", show_default=True, help="Seed count (0..k-1) or comma-separated list.")
@click.option("--jobs", type=int, default=1, show_default=True)
def sweep(scenario, algo, samples, gauss_points, knn, out_dir, seeds, jobs):
    """Repeat a scenario over several seeds and aggregate the costs."""
    sc = _resolve(scenario, algo, samples, None, gauss_points, knn)
    aggregate, summaries = run_seed_sweep(sc, _parse_seeds(seeds), out_dir, jobs=jobs)
    click.echo(json.dumps(aggregate["algorithms"], indent=2))
    if all(s.all_failed for s in summaries):
        sys.exit(EXIT_PLANNING)


@cli.command()
def presets():
    """List built-in scenarios."""
    for name, p in PRESETS.items():
        click.echo(f"{name:12s} {p['description']}")


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except (ScenarioError, click.ClickException) as exc:
        msg = exc.format_message() if isinstance(exc, click.ClickException) else str(exc)
        click.echo(f"error: {msg}", err=True)
        sys.exit(EXIT_VALIDATION)
    except click.exceptions.Abort:
        sys.exit(EXIT_VALIDATION)
    sys.exit(0)


if __name__ == "__main__":
    main()
