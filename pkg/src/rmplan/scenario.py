"""Scenario configs: JSON files or built-in presets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .planner import ALGORITHMS
from .quadrature import DEFAULT_ORDER
from .roadmap import Workspace
from .surface import Flat, GaussianPeak, HeightField, PeakSum, field_from_config


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class Scenario:
    name: str
    field: HeightField
    workspace: Workspace
    start: tuple[float, float]
    goal: tuple[float, float]
    samples: int
    seed: int = 0
    gauss_points: int = DEFAULT_ORDER
    knn: int | None = None
    algorithms: tuple[str, ...] = ALGORITHMS
    extra: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        if tuple(self.start) == tuple(self.goal):
            raise ScenarioError("goal: must differ from start")
        if not self.workspace.contains(self.start):
            raise ScenarioError("start: outside workspace")
        if not self.workspace.contains(self.goal):
            raise ScenarioError("goal: outside workspace")
        if self.samples < 2:
            raise ScenarioError("samples: must be >= 2")
        if self.seed < 0:
            raise ScenarioError("seed: must be non-negative")
        if self.gauss_points < 1:
            raise ScenarioError("gauss_points: must be >= 1")
        if self.knn is not None and self.knn < 1:
            raise ScenarioError("knn: must be >= 1")
        bad = [a for a in self.algorithms if a not in ALGORITHMS]
        if bad or not self.algorithms:
            raise ScenarioError(f"algorithms: unknown {bad}, choose from {list(ALGORITHMS)}")

    def to_config(self) -> dict:
        ws = self.workspace
        return {
            "name": self.name,
            "surface": self.field.to_config(),
            "workspace": [ws.min1, ws.max1, ws.min2, ws.max2],
            "start": list(self.start),
            "goal": list(self.goal),
            "samples": self.samples,
            "seed": self.seed,
            "gauss_points": self.gauss_points,
            "knn": self.knn,
            "algorithms": list(self.algorithms),
        }


_PAPER_WS = Workspace(-1.0, 11.0, -1.0, 11.0)


def _peaks(*specs, coefficient):
    return PeakSum(tuple(GaussianPeak.from_coefficient(a, c, coefficient) for a, c in specs))


PRESETS = {
    "one-peak": dict(
        field=_peaks((6.0, (5.0, 6.0)), coefficient=0.2),
        samples=500,
        description="6 exp(-(1/5)[(x1-5)^2 + (x2-6)^2]), 500 nodes",
    ),
    "three-peaks": dict(
        field=_peaks((8.0, (3.0, 2.0)), (9.0, (7.0, 3.0)), (8.0, (6.0, 8.0)), coefficient=0.5),
        samples=700,
        description="three Gaussian peaks (8, 9, 8), 700 nodes",
    ),
    "four-peaks": dict(
        field=_peaks((5.0, (3.0, 2.0)), (5.0, (7.0, 3.0)), (5.0, (3.0, 7.0)), (5.0, (7.0, 7.0)), coefficient=0.5),
        samples=700,
        description="four Gaussian peaks of height 5, 700 nodes",
    ),
    "flat": dict(
        field=Flat(0.0),
        samples=500,
        description="flat plane x3 = 0 (degenerate check), 500 nodes",
    ),
}


def preset(name: str) -> Scenario:
    try:
        p = PRESETS[name]
    except KeyError:
        raise ScenarioError(f"unknown preset {name!r}; available: {', '.join(PRESETS)}") from None
    return Scenario(name=name, field=p["field"], workspace=_PAPER_WS, start=(0.0, 0.0),
                    goal=(10.0, 10.0), samples=p["samples"])


def _point(cfg, key):
    try:
        x1, x2 = cfg[key]
        return float(x1), float(x2)
    except KeyError:
        raise ScenarioError(f"{key}: missing") from None
    except (TypeError, ValueError):
        raise ScenarioError(f"{key}: expected [x1, x2]") from None


def scenario_from_config(cfg: dict) -> Scenario:
    if not isinstance(cfg, dict):
        raise ScenarioError("config: expected a JSON object")
    if "surface" not in cfg:
        raise ScenarioError("surface: missing")
    try:
        field = field_from_config(cfg["surface"])
    except ValueError as exc:
        raise ScenarioError(str(exc)) from None
    try:
        ws = Workspace(*map(float, cfg.get("workspace", [-1.0, 11.0, -1.0, 11.0])))
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"workspace: {exc}") from None
    if "samples" not in cfg:
        raise ScenarioError("samples: missing")
    algos = cfg.get("algorithms", list(ALGORITHMS))
    if isinstance(algos, str):
        algos = list(ALGORITHMS) if algos == "all" else [algos]
    knn = cfg.get("knn")
    try:
        return Scenario(
            name=str(cfg.get("name", "custom")),
            field=field,
            workspace=ws,
            start=_point(cfg, "start"),
            goal=_point(cfg, "goal"),
            samples=int(cfg["samples"]),
            seed=int(cfg.get("seed", 0)),
            gauss_points=int(cfg.get("gauss_points", DEFAULT_ORDER)),
            knn=None if knn is None else int(knn),
            algorithms=tuple(algos),
        )
    except ScenarioError:
        raise
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"config: {exc}") from None


def load_scenario(source: str | Path) -> Scenario:
    """Resolve a preset name, a path to a JSON file, or inline JSON text."""
    text = str(source)
    if text in PRESETS:
        return preset(text)
    path = Path(text)
    if not text.lstrip().startswith("{"):
        if not path.is_file():
            raise ScenarioError(f"unknown preset or missing file {text!r}; presets: {', '.join(PRESETS)}")
        text = path.read_text()
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"config: invalid JSON ({exc})") from None
    return scenario_from_config(cfg)
