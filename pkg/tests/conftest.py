from pathlib import Path

import pytest

from colorlab.graph import parse_graph6

DATA = Path(__file__).parent / "data"


def load_g6(name):
    return [parse_graph6(line) for line in (DATA / name).read_text().split()]


@pytest.fixture(scope="session")
def connected_upto5():
    return load_g6("connected_upto5.g6")


@pytest.fixture(scope="session")
def graphs_upto8():
    return load_g6("graphs_upto8.g6")


@pytest.fixture(scope="session")
def graphs_upto7(graphs_upto8):
    return [g for g in graphs_upto8 if g.n <= 7]


@pytest.fixture(scope="session")
def trees9():
    return load_g6("trees9.g6")
