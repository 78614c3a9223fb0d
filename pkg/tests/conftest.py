from fractions import Fraction as F

import pytest

from lapkit.datasets import example_path, load_example
from lapkit.model import to_dual


@pytest.fixture
def example():
    return load_example()


@pytest.fixture
def problem(example):
    return example[0]


@pytest.fixture
def start(example):
    return example[1]


@pytest.fixture
def dual(problem):
    return to_dual(problem)


@pytest.fixture
def example_file():
    return str(example_path())


def frac_vec(*values):
    return [F(v) for v in values]
