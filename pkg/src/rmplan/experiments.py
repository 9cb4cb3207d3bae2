"""Run scenarios end to end and write path/summary files."""

from __future__ import annotations

import dataclasses
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .edge_cost import CostModel
from .path_lift import lift_path
from .planner import UnreachableGoal, astar, dijkstra, path_surface_length
from .quadrature import gauss_legendre
from .roadmap import build_graph, prune_knn, sample_points
from .scenario import Scenario

log = logging.getLogger(__name__)

LIFT_DENSITY = 200

_MODEL_FOR = {
    "rm-dijkstra": CostModel.RIEMANNIAN,
    "dijkstra-euclid": CostModel.CHORD3D,
    "astar-euclid": CostModel.CHORD3D,
}


@dataclasses.dataclass
class RunSummary:
    scenario: str
    seed: int
    records: dict  # algorithm -> record
    config: dict
    warnings: list[str]
    timing: dict
    points: np.ndarray = dataclasses.field(repr=False)
    plans: dict = dataclasses.field(repr=False, default_factory=dict)
    lifted: dict = dataclasses.field(repr=False, default_factory=dict)

    @property
    def all_failed(self) -> bool:
        return all(rec["status"] != "ok" for rec in self.records.values())

    def to_dict(self) -> dict:
        # wall-clock times live in `timing` so this record is reproducible byte for byte
        return {
            "scenario": self.scenario,
            "seed": self.seed,
            "config": self.config,
            "node_count": int(len(self.points)),
            "warnings": self.warnings,
            "algorithms": self.records,
        }


def run_scenario(sc: Scenario, out_dir: str | Path | None = None,
                 lift_density: int = LIFT_DENSITY) -> RunSummary:
    """Sample one node set, cost it per model, run each algorithm and lift its path."""
    rule = gauss_legendre(sc.gauss_points)
    t0 = time.perf_counter()
    points = sample_points(sc.samples, sc.workspace, sc.seed, sc.start, sc.goal)
    timing = {"sampling": time.perf_counter() - t0}

    graphs = {}
    warnings: list[str] = []
    for model in sorted({_MODEL_FOR[a] for a in sc.algorithms}, key=lambda m: m.value):
        t = time.perf_counter()
        g = build_graph(points, sc.field, model, rule, seed=sc.seed)
        if sc.knn is not None:
            g = prune_knn(g, sc.knn)
            warnings.extend(f"{model.value}: {w}" for w in g.warnings)
        graphs[model] = g
        timing[f"graph_{model.value}"] = time.perf_counter() - t

    records, plans, lifted = {}, {}, {}
    for algo in sc.algorithms:
        g = graphs[_MODEL_FOR[algo]]
        try:
            plan = astar(g, sc.field) if algo == "astar-euclid" else dijkstra(g)
        except UnreachableGoal as exc:
            log.warning("%s seed %d: %s failed: %s", sc.name, sc.seed, algo, exc)
            records[algo] = {"status": "failed", "reason": str(exc)}
            continue
        plans[algo] = plan
        lifted[algo] = lift_path(sc.field, plan.planar_polyline, lift_density)
        records[algo] = {
            "status": "ok",
            "edge_cost_total": plan.total_cost,
            "surface_length": path_surface_length(sc.field, plan.planar_polyline, rule),
            "path_node_count": len(plan.node_sequence),
            "expanded_count": plan.expanded_count,
            "node_sequence": plan.node_sequence,
        }
        timing[algo] = plan.elapsed

    summary = RunSummary(sc.name, sc.seed, records, sc.to_config(), warnings, timing,
                         points, plans, lifted)
    if out_dir is not None:
        write_run(summary, Path(out_dir))
    return summary


def _save_csv(path: Path, header: str, rows: np.ndarray):
    np.savetxt(path, rows, fmt="%.17g", delimiter=",", header=header, comments="")


def write_run(summary: RunSummary, out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    _save_csv(out_dir / "nodes.csv", "x1,x2", summary.points)
    for algo, plan in summary.plans.items():
        _save_csv(out_dir / f"{algo}_polyline.csv", "x1,x2", plan.planar_polyline)
        path = summary.lifted[algo]
        _save_csv(out_dir / f"{algo}_path3d.csv", "t,x1,x2,x3",
                  np.column_stack([path.arc_parameter(), path.samples]))
    (out_dir / "summary.json").write_text(json.dumps(summary.to_dict(), indent=2) + "\n")
    (out_dir / "timing.json").write_text(json.dumps(summary.timing, indent=2) + "\n")


def _run_one(args):
    sc, out_dir = args
    return run_scenario(sc, out_dir)


def run_seed_sweep(sc: Scenario, seeds, out_dir: str | Path | None = None, jobs: int = 1):
    """Run ``sc`` once per seed and aggregate costs per algorithm.

    Returns ``(aggregate, summaries)``. Each seed writes to its own
    ``seed_<k>`` subdirectory when ``out_dir`` is given.
    """
    seeds = [int(s) for s in seeds]
    if not seeds:
        raise ValueError("need at least one seed")
    out = Path(out_dir) if out_dir is not None else None
    tasks = [(dataclasses.replace(sc, seed=s), out / f"seed_{s}" if out else None) for s in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            summaries = list(pool.map(_run_one, tasks))
    else:
        summaries = [_run_one(t) for t in tasks]

    aggregate = {"scenario": sc.name, "seeds": seeds, "algorithms": {}}
    for algo in sc.algorithms:
        ok = [s.records[algo] for s in summaries if s.records[algo]["status"] == "ok"]
        entry = {"runs": len(ok), "failed": len(summaries) - len(ok)}
        for key in ("edge_cost_total", "surface_length"):
            vals = np.array([r[key] for r in ok])
            entry[key] = _stats(vals)
        aggregate["algorithms"][algo] = entry
    if out is not None:
        write_aggregate(aggregate, out)
    return aggregate, summaries


def _stats(vals: np.ndarray) -> dict:
    if len(vals) == 0:
        return {"mean": None, "min": None, "max": None, "std": None}
    return {
        "mean": float(vals.mean()),
        "min": float(vals.min()),
        "max": float(vals.max()),
        "std": float(vals.std(ddof=1)) if len(vals) > 1 else 0.0,
    }


def write_aggregate(aggregate: dict, out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "aggregate.json").write_text(json.dumps(aggregate, indent=2) + "\n")
    lines = ["algorithm,measure,runs,mean,min,max,std"]
    for algo, entry in aggregate["algorithms"].items():
        for key in ("edge_cost_total", "surface_length"):
            st = entry[key]
            vals = ["" if st[k] is None else repr(st[k]) for k in ("mean", "min", "max", "std")]
            lines.append(",".join([algo, key, str(entry["runs"]), *vals]))
    (out_dir / "aggregate.csv").write_text("\n".join(lines) + "\n")
