import random

import pytest

from copclean.graphs import Graph


@pytest.fixture(scope="session")
def small_connected():
    """Connected graphs on up to 5 vertices, one per isomorphism class."""
    from copclean.graphs import enumerate_connected

    out = []
    for n in range(1, 6):
        out.extend(enumerate_connected(n))
    return out


def random_connected(n: int, rng: random.Random) -> Graph:
    """Random connected graph: a random spanning tree plus extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a = order[rng.randrange(i)]
        edges.add((min(a, order[i]), max(a, order[i])))
    extra = rng.randrange(0, n * (n - 1) // 2 - (n - 1) + 1) if n > 1 else 0
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if extra == 0:
            break
        if (u, v) not in edges:
            edges.add((u, v))
            extra -= 1
    return Graph.from_edges(n, sorted(edges))
