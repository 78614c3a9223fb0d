"""Bundled problem files."""
from importlib import resources

from .model import parse_problem


def example_path():
    """Path to the bundled 5x5 instance (with a dual start point)."""
    return resources.files("lapkit") / "data" / "worked_example.lpt"


def load_example(arithmetic="rational"):
    """Return ``(problem, start)`` for the bundled 5x5 instance."""
    problem, start = parse_problem(example_path().read_bytes())
    if arithmetic != "rational":
        problem = problem.astype(arithmetic)
        start = start.astype(float)
    return problem, start
