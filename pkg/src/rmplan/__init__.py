"""Optimal paths on height surfaces using the metric induced on the projection plane."""

from .edge_cost import CostModel, euclid3d_distance, lifted_polyline_length, rm_line_distance
from .metric import MetricTensor, metric_at
from .path_lift import SurfacePath, lift_path
from .planner import PlanResult, UnreachableGoal, astar, dijkstra, path_surface_length
from .quadrature import QuadratureRule, gauss_legendre, integrate
from .roadmap import Roadmap, Workspace, build_graph, prune_knn, sample_points
from .scenario import Scenario, ScenarioError, load_scenario
from .surface import Flat, GaussianPeak, HeightField, PeakSum, Plane

__version__ = "0.1.0"
