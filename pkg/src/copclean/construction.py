"""A family of graphs where few searchers can see everything quickly but
many are needed to actually capture.

Layout: 2k outside blocks, each a copy of Z_{2^m}, plus 2k hub vertices.
Residue a in block i is vertex ``i*2^m + a``; hub i is ``2k*2^m + i``.  The
m bit positions are split into 2k disjoint classes, one per block.  Edges:

* a_i ~ (a + 2^q mod 2^m)_j for every q in class(i) and every block j != i
  (movement between blocks by the source block's step sizes),
* hub i ~ every vertex of block i, and the hubs form a clique.

Hubs dominate everything, so k searchers sitting on half the hubs and then
hopping to the other half wipe the whole graph in one move.  Evasion rests
on a per-pair property: a searcher standing at offset delta from an evader
can interfere with at most one of the evader's forward step types.  That
holds when the class partition is "spaced" (no class contains q and q+1,
nor q and q+2); ``check_blocking`` verifies it against the built graph's
actual adjacency, exhaustively via translation classes or by sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cleaning import StrategyScript
from .errors import BadParamError
from .graphs import Graph


@dataclass(frozen=True)
class ConstructionSpec:
    k: int
    m: Optional[int] = None          # default 4*k*k
    partition: Optional[tuple[tuple[int, ...], ...]] = None  # default round-robin

    def resolved(self) -> tuple[int, int, tuple[tuple[int, ...], ...]]:
        if self.k < 1:
            raise BadParamError("construction needs k >= 1")
        m = 4 * self.k * self.k if self.m is None else self.m
        parts = 2 * self.k
        if m < parts or m % parts != 0:
            raise BadParamError(f"step count m={m} must be a positive multiple of {parts}")
        part = self.partition if self.partition is not None else default_partition(self.k, m)
        _validate_partition(part, m, parts)
        return m, parts, tuple(tuple(sorted(c)) for c in part)


def default_partition(k: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Round-robin: bit position q goes to class q mod 2k."""
    parts = 2 * k
    return tuple(tuple(range(c, m, parts)) for c in range(parts))


def _validate_partition(part, m, nparts):
    if len(part) != nparts:
        raise BadParamError(f"partition needs exactly {nparts} classes, got {len(part)}")
    seen = set()
    for cls in part:
        if not cls:
            raise BadParamError("partition classes must be nonempty")
        for q in cls:
            if not 0 <= q < m:
                raise BadParamError(f"bit position {q} outside 0..{m - 1}")
            if q in seen:
                raise BadParamError(f"bit position {q} assigned twice")
            seen.add(q)
    if len(seen) != m:
        raise BadParamError("partition must cover every bit position")


def spacing_ok(partition) -> bool:
    """No class may hold both q and q+1, nor both q and q+2."""
    cls_of = {}
    for ci, cls in enumerate(partition):
        for q in cls:
            cls_of[q] = ci
    m = len(cls_of)
    for q in range(m - 1):
        if cls_of[q] == cls_of[q + 1]:
            return False
    for q in range(m - 2):
        if cls_of[q] == cls_of[q + 2]:
            return False
    return True


@dataclass
class ConstructionGraph:
    graph: Graph
    k: int
    m: int
    partition: tuple[tuple[int, ...], ...]
    cls_of: dict = field(repr=False)

    @property
    def blocks(self) -> int:
        return 2 * self.k

    @property
    def block_size(self) -> int:
        return 1 << self.m

    def vertex_id(self, block: int, residue: int) -> int:
        return (block << self.m) | residue

    def hub_id(self, block: int) -> int:
        return (self.blocks << self.m) + block

    def block_of(self, v: int) -> Optional[int]:
        if v >= self.blocks << self.m:
            return None  # hub
        return v >> self.m

    def residue_of(self, v: int) -> int:
        return v & ((1 << self.m) - 1)


def build_construction(spec: ConstructionSpec, allow_bad_spacing: bool = False) -> ConstructionGraph:
    m, nblocks, partition = spec.resolved()
    if not allow_bad_spacing and not spacing_ok(partition):
        raise BadParamError(
            "partition violates the spacing rule (a class holds q with q+1 or q+2); "
            "pass allow_bad_spacing=True to build it anyway"
        )
    size = 1 << m
    mask = size - 1
    n = nblocks * size + nblocks
    hub0 = nblocks * size

    us_parts = []
    vs_parts = []
    a = np.arange(size, dtype=np.int64)
    for i in range(nblocks):
        base = i * size
        for q in partition[i]:
            b = (a + (1 << q)) & mask
            for j in range(nblocks):
                if j == i:
                    continue
                us_parts.append(base + a)
                vs_parts.append(j * size + b)
        us_parts.append(np.full(size, hub0 + i, dtype=np.int64))
        vs_parts.append(base + a)
    hub_u = []
    hub_v = []
    for i in range(nblocks):
        for j in range(i + 1, nblocks):
            hub_u.append(hub0 + i)
            hub_v.append(hub0 + j)
    us_parts.append(np.asarray(hub_u, dtype=np.int64))
    vs_parts.append(np.asarray(hub_v, dtype=np.int64))

    g = Graph.from_edge_arrays(
        n, np.concatenate(us_parts), np.concatenate(vs_parts),
        name=f"construction:k={spec.k}:m={m}",
    )
    cls_of = {}
    for ci, cls in enumerate(partition):
        for q in cls:
            cls_of[q] = ci
    return ConstructionGraph(graph=g, k=spec.k, m=m, partition=partition, cls_of=cls_of)


# -- checks -------------------------------------------------------------------


@dataclass
class BlockingReport:
    mode: str
    checked_pairs: int
    max_blocked: int
    passed: bool                      # every pair interferes with <= 1 type
    violations: list
    samples: Optional[int] = None
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "checked_pairs": self.checked_pairs,
            "max_blocked": self.max_blocked,
            "passed": self.passed,
            "violations": self.violations,
            "samples": self.samples,
            "seed": self.seed,
        }


def _blocked_types(cg: ConstructionGraph, evader: int, searcher: int, searcher_adj) -> list[int]:
    """Forward step types of the evader that the searcher interferes with,
    judged purely by the built graph: a type q counts as blocked when the
    searcher occupies or is adjacent to one of its landing vertices."""
    g = cg.graph
    i = cg.block_of(evader)
    a = cg.residue_of(evader)
    mask = (1 << cg.m) - 1
    out = []
    for q in cg.partition[i]:
        c = (a + (1 << q)) & mask
        hit = False
        for j in range(cg.blocks):
            if j == i:
                continue
            w = cg.vertex_id(j, c)
            if w == searcher or w in searcher_adj:
                hit = True
                break
        if hit:
            out.append(q)
    return out


def check_blocking(
    cg: ConstructionGraph,
    mode: str = "exhaustive",
    samples: int = 1_000_000,
    seed: int = 0,
    max_violations: int = 5,
) -> BlockingReport:
    """Verify the one-type-per-searcher interference property over ordered
    pairs of distinct outside vertices.

    Exhaustive mode walks translation classes: shifting every residue by a
    constant is an automorphism (all edges depend on residue differences
    only), so pinning the evader's residue at 0 covers every pair; the
    reported pair count is the full ordered total.  Sampled mode draws
    seeded random pairs and checks them directly.
    """
    g = cg.graph
    outside = cg.blocks << cg.m
    total_pairs = outside * (outside - 1)
    max_blocked = 0
    violations = []

    def record(ev, se, types):
        nonlocal max_blocked
        if len(types) > max_blocked:
            max_blocked = len(types)
        if len(types) > 1 and len(violations) < max_violations:
            violations.append({
                "evader": [cg.block_of(ev), cg.residue_of(ev)],
                "searcher": [cg.block_of(se), cg.residue_of(se)],
                "delta": (cg.residue_of(se) - cg.residue_of(ev)) & ((1 << cg.m) - 1),
                "types": types,
            })

    if mode == "exhaustive":
        size = 1 << cg.m
        for j in range(cg.blocks):
            for delta in range(size):
                se = cg.vertex_id(j, delta)
                adj = set(g.neighbors(se))
                for i in range(cg.blocks):
                    if i == j and delta == 0:
                        continue
                    ev = cg.vertex_id(i, 0)
                    record(ev, se, _blocked_types(cg, ev, se, adj))
        return BlockingReport(
            mode=mode, checked_pairs=total_pairs, max_blocked=max_blocked,
            passed=max_blocked <= 1, violations=violations,
        )
    if mode == "sampled":
        rng = random.Random(seed)
        adj_cache: dict[int, set] = {}
        for _ in range(samples):
            ev = rng.randrange(outside)
            se = rng.randrange(outside)
            while se == ev:
                se = rng.randrange(outside)
            adj = adj_cache.get(se)
            if adj is None:
                adj = set(g.neighbors(se))
                if len(adj_cache) < 200_000:
                    adj_cache[se] = adj
            record(ev, se, _blocked_types(cg, ev, se, adj))
        return BlockingReport(
            mode=mode, checked_pairs=samples, max_blocked=max_blocked,
            passed=max_blocked <= 1, violations=violations,
            samples=samples, seed=seed,
        )
    raise BadParamError("mode must be 'exhaustive' or 'sampled'")


def check_middle_dominating(cg: ConstructionGraph) -> bool:
    """Every vertex must be a hub or adjacent to its block's hub, and the
    hubs must form a clique, checked against the built adjacency."""
    g = cg.graph
    for i in range(cg.blocks):
        h = cg.hub_id(i)
        for j in range(i + 1, cg.blocks):
            if not g.adjacent(h, cg.hub_id(j)):
                return False
        deg = g.degree(h)
        if deg != cg.block_size + cg.blocks - 1:
            return False
        row = set(g.neighbors(h))
        base = i << cg.m
        for a in range(cg.block_size):
            if base + a not in row:
                return False
    return True


def scripted_seeing_strategy(cg: ConstructionGraph, cops: Optional[int] = None) -> StrategyScript:
    """Place searchers on the first half of the hubs, then hop each to the
    matching hub in the second half.  With cops=k this cleans everything on
    the first move (hubs cover their blocks at sight 1 and form a clique);
    fewer searchers leave uncovered blocks and the script fails, which the
    tests use as the contrast case."""
    c = cg.k if cops is None else cops
    if not 1 <= c <= cg.k:
        raise BadParamError(f"scripted strategy supports 1..{cg.k} searchers")
    place = tuple(cg.hub_id(i) for i in range(c))
    hop = tuple(cg.hub_id(cg.k + i) for i in range(c))
    return StrategyScript(l=1, place=place, turns=(hop,))
