"""Collision-free motion planning for two robots on a wedge of three circles."""
from .configuration import Configuration, classify_network, config_distance
from .geometry import VERTEX, PhysPoint, gamma_distance, point_on
from .planner import Plan, classify_domain, plan

__all__ = [
    "Configuration",
    "PhysPoint",
    "Plan",
    "VERTEX",
    "classify_domain",
    "classify_network",
    "config_distance",
    "gamma_distance",
    "plan",
    "point_on",
]
