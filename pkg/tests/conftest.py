from __future__ import annotations

import random

import pytest

from apexobs.graphs import Graph


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)
