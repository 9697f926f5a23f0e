"""Slow reference implementations used to pin expected values.

Everything here favors obviousness over speed: plain sets and tuples, no bit
packing, no pruning, no shared code with the package beyond the Graph
container.  Keep it that way; the value of these oracles is that they fail
differently than the fast solvers do.
"""

from __future__ import annotations

import itertools
from collections import deque

from copclean.graphs import Graph


# -- canonical forms and counting ------------------------------------------------


def upper_triangle_code(adj: set, n: int, perm) -> int:
    """Adjacency upper triangle of the relabeled graph as one integer,
    column-major to mirror the fast implementation's bit order."""
    code = 0
    bit = 0
    for w in range(1, n):
        for u in range(w):
            code <<= 1
            if (perm[u], perm[w]) in adj or (perm[w], perm[u]) in adj:
                code |= 1
            bit += 1
    return code


def brute_canonical(g: Graph) -> int:
    adj = set(g.edges())
    best = None
    for perm in itertools.permutations(range(g.n)):
        inv = [0] * g.n
        for i, p in enumerate(perm):
            inv[p] = i
        code = upper_triangle_code(adj, g.n, perm)
        if best is None or code < best:
            best = code
    return best


def all_connected_masks(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if _connected(g):
            yield g


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    q = deque([0])
    while q:
        v = q.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == g.n


def brute_count_connected(n: int) -> int:
    return len({brute_canonical(g) for g in all_connected_masks(n)})


def brute_girth(g: Graph):
    """Shortest cycle length by DFS over all simple paths; None if acyclic."""
    best = None
    n = g.n

    def walk(start, v, visited, depth):
        nonlocal best
        for w in g.neighbors(v):
            if w == start and depth >= 3:
                if best is None or depth < best:
                    best = depth
            elif w > start and w not in visited and (best is None or depth + 1 < best):
                visited.add(w)
                walk(start, w, visited, depth + 1)
                visited.discard(w)

    for s in range(n):
        walk(s, s, {s}, 1)
    return best


# -- cleaning dynamics -----------------------------------------------------------


def ball(g: Graph, v: int, l: int) -> frozenset:
    dist = {v: 0}
    q = deque([v])
    while q:
        u = q.popleft()
        if dist[u] == l:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return frozenset(dist)


def seen_by(g: Graph, cops, l: int) -> frozenset:
    out = frozenset()
    for c in cops:
        out |= ball(g, c, l)
    return out


def spread(g: Graph, gas: frozenset, sight: frozenset) -> frozenset:
    grown = set(gas)
    for v in gas:
        for w in g.neighbors(v):
            if w not in sight:
                grown.add(w)
    return frozenset(grown)


def clean_reachable_states(g: Graph, k: int, l: int):
    """Every (cops, gas) snapshot after a clean, by plain breadth first
    search over the full game tree."""
    verts = frozenset(range(g.n))
    start = []
    for cops in itertools.combinations_with_replacement(range(g.n), k):
        gas = verts - seen_by(g, cops, l)
        start.append((tuple(sorted(cops)), gas))
    seen = set(start)
    q = deque(start)
    while q:
        cops, gas = q.popleft()
        balls = [sorted(ball(g, c, 1)) for c in cops]
        for dest in itertools.product(*balls):
            nxt = tuple(sorted(dest))
            sight = seen_by(g, nxt, l)
            gas1 = gas - sight
            gas2 = spread(g, gas1, sight)
            state = (nxt, gas2)
            # the after-clean snapshot (nxt, gas1) is what gets measured, but
            # the game continues from the respread gas
            if (nxt, gas1) not in seen:
                seen.add((nxt, gas1))
            if state not in seen:
                seen.add(state)
                q.append(state)
    return seen


def brute_clean(g: Graph, k: int, l: int):
    """(max_clean, min_gas) over every snapshot measured after a clean."""
    verts = frozenset(range(g.n))
    best_gas = g.n
    frontier = []
    visited = set()
    for cops in itertools.combinations_with_replacement(range(g.n), k):
        cops = tuple(sorted(cops))
        gas = verts - seen_by(g, cops, l)
        best_gas = min(best_gas, len(gas))
        if (cops, gas) not in visited:
            visited.add((cops, gas))
            frontier.append((cops, gas))
    q = deque(frontier)
    while q:
        cops, gas = q.popleft()
        balls = [sorted(ball(g, c, 1)) for c in cops]
        for dest in itertools.product(*balls):
            nxt = tuple(sorted(dest))
            sight = seen_by(g, nxt, l)
            gas1 = gas - sight
            best_gas = min(best_gas, len(gas1))
            gas2 = spread(g, gas1, sight)
            state = (nxt, gas2)
            if state not in visited:
                visited.add(state)
                q.append(state)
    return g.n - best_gas, best_gas


def brute_seeing_number(g: Graph, l: int) -> int:
    for k in range(1, g.n + 1):
        if brute_clean(g, k, l)[1] == 0:
            return k
    raise AssertionError("unreachable")


def brute_inference_number(g: Graph, l: int, r: int) -> int:
    for k in range(1, g.n + 1):
        if brute_clean(g, k, l)[1] <= r:
            return k
    raise AssertionError("unreachable")


# -- perfect information pursuit ---------------------------------------------------


def brute_pursuit_time(g: Graph, k: int, rho: int, cap: int | None = None):
    """Optimal capture time with perfect information, or None if the evader
    escapes forever.  Capture is checked right after the pursuers move."""
    if cap is None:
        cap = 2 * g.n * g.n
    dist = [g.bfs_dist(v) for v in range(g.n)]

    def zone(cfg):
        return {r for r in range(g.n) if any(0 <= dist[c][r] <= rho for c in cfg)}

    cfgs = [tuple(sorted(c)) for c in
            itertools.combinations_with_replacement(range(g.n), k)]
    moves = {}
    for cfg in cfgs:
        balls = [sorted(ball(g, c, 1)) for c in cfg]
        moves[cfg] = sorted({tuple(sorted(d)) for d in itertools.product(*balls)})
    zones = {cfg: zone(cfg) for cfg in cfgs}

    # win[(cfg, r)] = optimal rounds to capture from a robber-to-move state
    # where the robber at r has already survived the capture check
    win = {}
    changed = True
    rounds = 0
    while changed and rounds <= cap:
        changed = False
        rounds += 1
        for cfg in cfgs:
            for r in range(g.n):
                if r in zones[cfg]:
                    continue
                best = None
                for nxt in moves[cfg]:
                    if r in zones[nxt]:
                        cand = 1
                    else:
                        worst = 0
                        ok = True
                        for r2 in sorted({r} | set(g.neighbors(r))):
                            if r2 in zones[nxt]:
                                continue
                            v = win.get((nxt, r2))
                            if v is None:
                                ok = False
                                break
                            worst = max(worst, v)
                        cand = 1 + worst if ok else None
                    if cand is not None and (best is None or cand < best):
                        best = cand
                if best is not None and win.get((cfg, r)) != best:
                    if win.get((cfg, r), 1 << 30) > best:
                        win[(cfg, r)] = best
                        changed = True
    result = None
    for cfg in cfgs:
        safe = [r for r in range(g.n) if r not in zones[cfg]]
        if not safe:
            cand = 0
        else:
            vals = [win.get((cfg, r)) for r in safe]
            if any(v is None for v in vals):
                continue
            cand = max(vals)
        if result is None or cand < result:
            result = cand
    return result


def brute_cop_number(g: Graph) -> int:
    for k in range(1, g.n + 1):
        if brute_pursuit_time(g, k, 0) is not None:
            return k
    raise AssertionError("unreachable")


# -- knowledge-set capture ----------------------------------------------------------


def brute_limited_capture(g: Graph, k: int, l: int, observe_after_cop_move: bool = True):
    """Can the pursuers guarantee co-location when they only see within
    distance l?  Recursive minimax over (cops, candidate set) with memoised
    loss detection via an iterative fixpoint."""
    verts = frozenset(range(g.n))
    cfgs = [tuple(sorted(c)) for c in
            itertools.combinations_with_replacement(range(g.n), k)]

    def split(cops, cand):
        sight = seen_by(g, cops, l)
        vis = cand & sight
        hid = cand - sight
        pieces = [frozenset([v]) for v in sorted(vis)]
        if hid:
            pieces.append(hid)
        return pieces

    def succ(cops, cand):
        """All (new_cops, [branch pieces]) after one joint move."""
        balls = [sorted(ball(g, c, 1)) for c in cops]
        out = []
        for dest in itertools.product(*balls):
            nxt = tuple(sorted(dest))
            occ = set(nxt)
            left = cand - frozenset(occ)
            if not left:
                out.append((nxt, []))
                continue
            mids = [left]
            if observe_after_cop_move:
                sight = seen_by(g, nxt, l)
                vis = left & sight
                hid = left - sight
                mids = [frozenset([v]) for v in sorted(vis)]
                if hid:
                    mids.append(hid)
            branches = []
            for piece in mids:
                grown = set()
                for v in piece:
                    grown.add(v)
                    grown.update(g.neighbors(v))
                grown -= occ
                if not grown:
                    continue
                branches.extend(split(nxt, frozenset(grown)))
            out.append((nxt, branches))
        return out

    # least fixpoint: a state is winning if some move has every branch winning
    reach = {}
    q = deque()
    init = []
    for cfg in cfgs:
        for piece in split(cfg, verts - frozenset(cfg)):
            key = (cfg, piece)
            init.append((cfg, key))
            if key not in reach:
                reach[key] = None
                q.append(key)
    while q:
        cops, cand = key = q.popleft()
        reach[key] = succ(cops, cand)
        for nxt, branches in reach[key]:
            for b in branches:
                k2 = (nxt, b)
                if k2 not in reach:
                    reach[k2] = None
                    q.append(k2)

    winning = set()
    changed = True
    while changed:
        changed = False
        for key, options in reach.items():
            if key in winning:
                continue
            for nxt, branches in options:
                if all((nxt, b) in winning for b in branches):
                    winning.add(key)
                    changed = True
                    break

    for cfg in cfgs:
        pieces = split(cfg, verts - frozenset(cfg))
        if not pieces or all((cfg, p) in winning for p in pieces):
            return True
    return False


def brute_capture_number_limited(g: Graph, l: int) -> int:
    for k in range(1, g.n + 1):
        if brute_limited_capture(g, k, l):
            return k
    raise AssertionError("unreachable")
