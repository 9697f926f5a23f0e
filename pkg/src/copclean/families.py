"""Parameterized graph families used by the harness and the test suites."""

from __future__ import annotations

import random

from .errors import BadParamError
from .graphs import Graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParamError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"cycle:{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise BadParamError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"path:{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParamError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"complete:{n}")


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise BadParamError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"star:{leaves}")


def spider(legs: int, leg_len: int) -> Graph:
    """Central vertex 0 with ``legs`` disjoint paths of ``leg_len`` edges."""
    if legs < 1 or leg_len < 1:
        raise BadParamError("spider needs legs >= 1 and leg_len >= 1")
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges, name=f"spider:{legs}:{leg_len}")


def heawood() -> Graph:
    # 14-cycle plus chords i -> i+5 from even i (LCF notation [5,-5]^7)
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph.from_edges(14, edges, name="heawood")


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices from a Prufer sequence."""
    if n < 1:
        raise BadParamError("tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, [], name=f"tree:{n}:{seed}")
    if n == 2:
        return Graph.from_edges(2, [(0, 1)], name=f"tree:{n}:{seed}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges, name=f"tree:{n}:{seed}")


def from_spec(spec: str) -> Graph:
    """Build a family member from a colon-separated spec string.

    Accepted forms: ``cycle:N``, ``path:N``, ``complete:N``, ``star:LEAVES``,
    ``spider:LEGS:LEGLEN``, ``heawood``, ``tree:N:SEED``.
    """
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "cycle" and len(parts) == 2:
            return cycle(int(parts[1]))
        if kind == "path" and len(parts) == 2:
            return path(int(parts[1]))
        if kind == "complete" and len(parts) == 2:
            return complete(int(parts[1]))
        if kind == "star" and len(parts) == 2:
            return star(int(parts[1]))
        if kind == "spider" and len(parts) == 3:
            return spider(int(parts[1]), int(parts[2]))
        if kind == "heawood" and len(parts) == 1:
            return heawood()
        if kind == "tree" and len(parts) == 3:
            return random_tree(int(parts[1]), int(parts[2]))
    except ValueError:
        raise BadParamError(f"non-integer parameter in family spec {spec!r}") from None
    raise BadParamError(f"unknown family spec {spec!r}")
