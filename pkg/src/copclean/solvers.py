"""Exact game solvers.

Three engines share this module:

* ``solve_cleaning`` explores the full cleaning game (searchers vs. gas) over
  packed integer states and answers see/infer/max-clean questions, with an
  optional replayable witness script.
* ``pursuit_solve`` is classic perfect-information pursuit with a capture
  radius, solved by backward induction over cop-move/robber-move states.
* ``limited_capture_solve`` handles capture under limited sight: cops track a
  set of candidate robber locations, and the game is an AND-OR reachability
  problem over (positions, candidate-set) states.

All engines enforce explicit state budgets and raise ``TooLargeError`` with
partial results rather than running away on oversized inputs.
"""

from __future__ import annotations

import itertools
import heapq
import os
from dataclasses import dataclass
from typing import Optional

from .cleaning import StrategyScript
from .errors import BadParamError, TooLargeError
from .graphs import Graph, canonical_key

_CLEAN_MAX_N = 26
_PURSUIT_MAX_N = 64
_DEFAULT_BUDGET = 5_000_000
_GREEDY_POPS = 20_000


def _budget(arg: Optional[int]) -> int:
    if arg is not None:
        if arg < 1:
            raise BadParamError("state budget must be positive")
        return arg
    env = os.environ.get("COPCLEAN_STATE_BUDGET")
    return int(env) if env else _DEFAULT_BUDGET


def _check_game_graph(g: Graph, max_n: int):
    if g.n > max_n:
        raise TooLargeError(f"solver handles up to {max_n} vertices, got {g.n}", partial=None)
    if not g.is_connected():
        raise BadParamError("solver expects a connected graph")


# -- shared precomputation ---------------------------------------------------


def _nor_tables(g: Graph):
    """Byte-sliced tables so the neighbor-union of any vertex mask costs
    four lookups."""
    rows = g.bit_rows
    n = g.n
    tables = []
    for bpos in range(4):
        t = [0] * 256
        base = bpos * 8
        if base < n:
            for byte in range(1, 256):
                low = byte & -byte
                idx = base + low.bit_length() - 1
                rest = t[byte ^ low]
                t[byte] = (rows[idx] if idx < n else 0) | rest
        tables.append(t)
    return tables


def _configs(n: int, k: int):
    return list(itertools.combinations_with_replacement(range(n), k))


def _config_tables(g: Graph, k: int, l: int):
    """Configs plus per-config sight masks and joint-move successor ranks."""
    n = g.n
    rows = g.bit_rows
    closed1 = [rows[v] | (1 << v) for v in range(n)]
    sight1 = [g.closed_l_mask(v, l) for v in range(n)]
    cfgs = _configs(n, k)
    rank = {c: i for i, c in enumerate(cfgs)}
    sights = []
    succs = []
    move_opts = [_bits(closed1[v]) for v in range(n)]
    for cfg in cfgs:
        s = 0
        for v in cfg:
            s |= sight1[v]
        sights.append(s)
        seen = set()
        for prod in itertools.product(*(move_opts[v] for v in cfg)):
            seen.add(rank[tuple(sorted(prod))])
        succs.append(sorted(seen))
    return cfgs, rank, sights, succs


def _bits(mask: int):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _occ_mask(cfg) -> int:
    m = 0
    for v in cfg:
        m |= 1 << v
    return m


def _initial_reps(g: Graph, cfgs, symmetry: Optional[bool]):
    """Indices of initial placements to try, one per placement-isomorphism
    class when symmetry reduction is on (minimum over placements is
    preserved: any play from a placement maps vertex-by-vertex to a play
    from an equivalent one)."""
    if symmetry is None:
        # canonical forms are cheap enough to pay off only in a mid band:
        # below it there is nothing to save, above it the certificate search
        # itself can dwarf the whole state-space walk
        symmetry = 10 <= g.n <= 14
    if not symmetry:
        return list(range(len(cfgs)))
    rows = g.bit_rows
    seen = set()
    reps = []
    for i, cfg in enumerate(cfgs):
        colors = [0] * g.n
        for v in cfg:
            colors[v] += 1
        key = canonical_key(rows, g.n, tuple(colors))
        if key not in seen:
            seen.add(key)
            reps.append(i)
    return reps


# -- cleaning game -----------------------------------------------------------


@dataclass
class CleanSolve:
    k: int
    l: int
    min_gas: int
    max_clean: int
    reached_stop: Optional[bool]
    states: int
    capped: bool
    witness: Optional[StrategyScript]


def _witness_script(cfgs, closed1, parents, parent_key, final_cfg_rank, n, l) -> StrategyScript:
    """Rebuild a playable script from the BFS parent chain.  Keys are
    after-spread states; the final transition to ``final_cfg_rank`` realizes
    the reported gas minimum."""
    chain = []
    key = parent_key
    while key is not None:
        chain.append(key)
        key = parents[key]
    chain.reverse()
    cfg_ranks = [k >> n for k in chain] + [final_cfg_rank]
    place = cfgs[cfg_ranks[0]]
    turns = []
    for a, b in zip(cfg_ranks, cfg_ranks[1:]):
        src = cfgs[a]
        dst = cfgs[b]
        matched = None
        for perm in itertools.permutations(dst):
            if all(closed1[s] >> t & 1 for s, t in zip(src, perm)):
                matched = perm
                break
        turns.append(matched)
    return StrategyScript(l=l, place=place, turns=tuple(turns))


def solve_cleaning(
    g: Graph,
    k: int,
    l: int,
    stop_at: Optional[int] = None,
    witness: bool = False,
    state_budget: Optional[int] = None,
    symmetry: Optional[bool] = None,
) -> CleanSolve:
    """Exhaustive reachability over the cleaning game for k searchers with
    sight radius l.

    Tracks the fewest simultaneous gas vertices over every post-clean
    snapshot of every play.  With ``stop_at`` set, returns as soon as a
    snapshot of at most that many gas vertices is found (reached_stop tells
    whether it was).  Budget overrun raises TooLargeError whose ``partial``
    holds the bound certified so far (true min gas can only be lower, so
    partial.max_clean is a valid lower bound).
    """
    if k < 1:
        raise BadParamError("need at least one searcher")
    if l < 0:
        raise BadParamError("sight radius must be >= 0")
    _check_game_graph(g, _CLEAN_MAX_N)
    budget = _budget(state_budget)
    n = g.n
    full = (1 << n) - 1
    rows = g.bit_rows
    closed1 = [rows[v] | (1 << v) for v in range(n)]
    cfgs, _, sights, succs = _config_tables(g, k, l)
    t0, t1, t2, t3 = _nor_tables(g)

    nconfigs = len(cfgs)
    use_bitmap = (nconfigs << n) <= (1 << 27)
    if use_bitmap:
        visited = bytearray(((nconfigs << n) + 7) >> 3)
    else:
        visited = set()
    parents = {} if witness else None

    best_gas = n + 1
    best_from = None     # (parent_key or None, cfg_rank) realizing best_gas
    states = 0
    frontier = []

    for ci in _initial_reps(g, cfgs, symmetry):
        gas0 = full & ~sights[ci]
        key = ci << n | gas0
        if use_bitmap:
            b, bit = key >> 3, 1 << (key & 7)
            if visited[b] & bit:
                continue
            visited[b] |= bit
        else:
            if key in visited:
                continue
            visited.add(key)
        states += 1
        if parents is not None:
            parents[key] = None
        pc = gas0.bit_count()
        if pc < best_gas:
            best_gas = pc
            best_from = (None, ci)
        frontier.append(key)
        if stop_at is not None and best_gas <= stop_at:
            break

    def result(reached, capped):
        wit = None
        if witness and best_from is not None:
            pkey, crank = best_from
            if pkey is None:
                wit = StrategyScript(l=l, place=cfgs[crank], turns=())
            else:
                wit = _witness_script(cfgs, closed1, parents, pkey, crank, n, l)
        return CleanSolve(
            k=k, l=l, min_gas=best_gas, max_clean=n - best_gas,
            reached_stop=None if stop_at is None else reached,
            states=states, capped=capped, witness=wit,
        )

    if stop_at is not None and best_gas <= stop_at:
        return result(True, False)

    while frontier:
        nxt = []
        for key in frontier:
            gas = key & full
            for c2 in succs[key >> n]:
                s2 = sights[c2]
                gas1 = gas & ~s2
                pc = gas1.bit_count()
                if pc < best_gas:
                    best_gas = pc
                    best_from = (key, c2)
                    if stop_at is not None and best_gas <= stop_at:
                        return result(True, False)
                nb = (
                    t0[gas1 & 255]
                    | t1[(gas1 >> 8) & 255]
                    | t2[(gas1 >> 16) & 255]
                    | t3[(gas1 >> 24) & 255]
                )
                gas2 = gas1 | (nb & ~s2)
                key2 = c2 << n | gas2
                if use_bitmap:
                    b, bit = key2 >> 3, 1 << (key2 & 7)
                    if visited[b] & bit:
                        continue
                    visited[b] |= bit
                else:
                    if key2 in visited:
                        continue
                    visited.add(key2)
                states += 1
                if parents is not None:
                    parents[key2] = key
                nxt.append(key2)
            if states > budget:
                raise TooLargeError(
                    f"state budget {budget} exhausted (visited {states})",
                    partial=result(False, True),
                )
        frontier = nxt

    return result(best_gas <= stop_at if stop_at is not None else None, False)


def _greedy_clean(g, k, l, target, witness, pops_cap=_GREEDY_POPS):
    """Cheap best-first probe for a play reaching at most ``target`` gas.
    Success gives a certificate (optionally a script); failure is silent and
    callers fall back to the exhaustive search."""
    n = g.n
    full = (1 << n) - 1
    rows = g.bit_rows
    closed1 = [rows[v] | (1 << v) for v in range(n)]
    cfgs, _, sights, succs = _config_tables(g, k, l)
    t0, t1, t2, t3 = _nor_tables(g)
    heap = []
    parents = {}
    seen = set()
    for ci, s in enumerate(sights):
        gas0 = full & ~s
        pc = gas0.bit_count()
        if pc <= target:
            if not witness:
                return True, None
            return True, StrategyScript(l=l, place=cfgs[ci], turns=())
        key = ci << n | gas0
        if key not in seen:
            seen.add(key)
            parents[key] = None
            heapq.heappush(heap, (pc, key))
    pops = 0
    while heap and pops < pops_cap:
        pc, key = heapq.heappop(heap)
        pops += 1
        gas = key & full
        for c2 in succs[key >> n]:
            s2 = sights[c2]
            gas1 = gas & ~s2
            if gas1.bit_count() <= target:
                if not witness:
                    return True, None
                return True, _witness_script(cfgs, closed1, parents, key, c2, n, l)
            nb = (
                t0[gas1 & 255] | t1[(gas1 >> 8) & 255]
                | t2[(gas1 >> 16) & 255] | t3[(gas1 >> 24) & 255]
            )
            gas2 = gas1 | (nb & ~s2)
            key2 = c2 << n | gas2
            if key2 not in seen:
                seen.add(key2)
                parents[key2] = key
                heapq.heappush(heap, (gas2.bit_count(), key2))
    return False, None


@dataclass
class ThresholdResult:
    value: int
    l: int
    witness: Optional[StrategyScript]
    states: int


def cleanable(g: Graph, k: int, l: int, witness: bool = False,
              state_budget: Optional[int] = None):
    """Can k searchers with sight l reach a moment with zero gas?
    Returns (bool, script-or-None, states-explored)."""
    if k < 1:
        raise BadParamError("need at least one searcher")
    _check_game_graph(g, _CLEAN_MAX_N)
    ok, script = _greedy_clean(g, k, l, 0, witness)
    if ok:
        return True, script, 0
    res = solve_cleaning(g, k, l, stop_at=0, witness=witness, state_budget=state_budget)
    return bool(res.reached_stop), res.witness if res.reached_stop else None, res.states


def seeing_number(g: Graph, l: int, witness: bool = False,
                  state_budget: Optional[int] = None) -> ThresholdResult:
    """Fewest searchers with sight l that can fully clean the graph."""
    total = 0
    for k in range(1, g.n + 1):
        ok, script, states = cleanable(g, k, l, witness=witness, state_budget=state_budget)
        total += states
        if ok:
            return ThresholdResult(value=k, l=l, witness=script, states=total)
    raise BadParamError("unreachable: n searchers always clean at placement")


def inference_number(g: Graph, l: int, r: int, witness: bool = False,
                     state_budget: Optional[int] = None) -> ThresholdResult:
    """Fewest searchers with sight l that can corner the gas down to at most
    r simultaneous vertices (r=0 recovers the full-clean question)."""
    if r < 0:
        raise BadParamError("residue bound must be >= 0")
    _check_game_graph(g, _CLEAN_MAX_N)
    total = 0
    for k in range(1, g.n + 1):
        ok, script = _greedy_clean(g, k, l, r, witness)
        if not ok:
            res = solve_cleaning(g, k, l, stop_at=r, witness=witness, state_budget=state_budget)
            total += res.states
            ok, script = res.reached_stop, res.witness
        if ok:
            return ThresholdResult(value=k, l=l, witness=script, states=total)
    raise BadParamError("unreachable: n searchers clean everything at placement")


def max_clean(g: Graph, k: int, l: int, witness: bool = False,
              state_budget: Optional[int] = None, symmetry: Optional[bool] = None) -> CleanSolve:
    """Most vertices k searchers with sight l can have simultaneously clean."""
    return solve_cleaning(g, k, l, stop_at=None, witness=witness,
                          state_budget=state_budget, symmetry=symmetry)


# -- perfect-information pursuit ----------------------------------------------


@dataclass
class PursuitResult:
    k: int
    rho: int
    capture: bool
    capture_time: Optional[int]
    placement: Optional[tuple[int, ...]]
    states: int


def pursuit_solve(g: Graph, k: int, rho: int, state_budget: Optional[int] = None) -> PursuitResult:
    """Backward induction for k pursuers catching a visible evader.

    Pursuers place first, then the evader places outside their radius-rho
    zone.  Each round all pursuers step (or stay), capture is checked, then
    the evader steps to a vertex outside the zone (staying is always safe
    for it, so mid-game forced captures cannot happen).  Capture time counts
    pursuer rounds; placement capture is time 0.
    """
    if k < 1:
        raise BadParamError("need at least one pursuer")
    if rho < 0:
        raise BadParamError("capture radius must be >= 0")
    _check_game_graph(g, _PURSUIT_MAX_N)
    budget = _budget(state_budget)
    n = g.n
    full = (1 << n) - 1
    rows = g.bit_rows

    ball = []
    for v in range(n):
        dist = g.bfs_dist(v)
        m = 0
        for w, d in enumerate(dist):
            if 0 <= d <= rho:
                m |= 1 << w
        ball.append(m)

    cfgs, _, _, succs = _config_tables(g, k, 0)
    zones = []
    for cfg in cfgs:
        z = 0
        for v in cfg:
            z |= ball[v]
        zones.append(z)
    nc = len(cfgs)
    if 2 * nc * n > budget:
        raise TooLargeError(f"pursuit space 2*{nc}*{n} exceeds budget {budget}", partial=None)

    # state ids: cop-to-move (c, r) -> c*n + r, evader-to-move offset by nc*n
    NONE = -1
    wc = [NONE] * (nc * n)
    wr = [NONE] * (nc * n)
    rob_counter = [0] * (nc * n)
    opts_mask = [0] * (nc * n)

    buckets: dict[int, list[tuple[int, int]]] = {}

    def push(val, kind, sid):
        buckets.setdefault(val, []).append((kind, sid))

    # seed: capturing moves give cop-states value 1
    for c in range(nc):
        zc = zones[c]
        can_capture = 0  # evader positions hit by some successor zone
        for c2 in succs[c]:
            can_capture |= zones[c2]
        alive = full & ~zc
        for r in _bits(alive):
            sid = c * n + r
            m = (rows[r] | (1 << r)) & ~zc
            opts_mask[sid] = m
            rob_counter[sid] = m.bit_count()
            if can_capture >> r & 1:
                wc[sid] = 1
                push(1, 0, sid)

    processed = 0
    val = 0
    while buckets:
        val = min(buckets)
        batch = buckets.pop(val)
        for kind, sid in batch:
            processed += 1
            c, r = divmod(sid, n)
            if kind == 0:
                # resolved cop-state: feed evader-state predecessors (same c)
                for r0 in _bits((rows[r] | (1 << r)) & ~zones[c]):
                    psid = c * n + r0
                    if wr[psid] != NONE:
                        continue
                    if not (opts_mask[psid] >> r & 1):
                        continue
                    rob_counter[psid] -= 1
                    if rob_counter[psid] == 0:
                        wr[psid] = val
                        push(val, 1, psid)
            else:
                # resolved evader-state: cop-state predecessors move into c
                for c0 in succs[c]:
                    if zones[c0] >> r & 1:
                        continue
                    psid = c0 * n + r
                    if wc[psid] == NONE:
                        wc[psid] = val + 1
                        push(val + 1, 0, psid)

    best = None
    best_cfg = None
    for c in range(nc):
        safe = full & ~zones[c]
        if safe == 0:
            cand = 0
        else:
            cand = 0
            ok = True
            for r in _bits(safe):
                v = wc[c * n + r]
                if v == NONE:
                    ok = False
                    break
                cand = max(cand, v)
            if not ok:
                continue
        if best is None or cand < best:
            best = cand
            best_cfg = cfgs[c]
    return PursuitResult(
        k=k, rho=rho, capture=best is not None,
        capture_time=best, placement=best_cfg, states=2 * nc * n,
    )


def reach_number(g: Graph, rho: int, state_budget: Optional[int] = None) -> int:
    """Fewest pursuers that can force themselves within distance rho of the
    evader."""
    for k in range(1, g.n + 1):
        if pursuit_solve(g, k, rho, state_budget=state_budget).capture:
            return k
    raise BadParamError("unreachable: pursuers on every vertex capture at placement")


def cop_number(g: Graph, state_budget: Optional[int] = None) -> int:
    """Fewest pursuers that can land on the evader (capture radius 0)."""
    return reach_number(g, 0, state_budget=state_budget)


# -- limited-sight capture -----------------------------------------------------


@dataclass
class LimitedCaptureResult:
    k: int
    l: int
    capture: bool
    capture_time: Optional[int]
    placement: Optional[tuple[int, ...]]
    states: int


def limited_capture_solve(
    g: Graph,
    k: int,
    l: int,
    observe_after_cop_move: bool = True,
    state_budget: Optional[int] = None,
    symmetry: Optional[bool] = None,
) -> LimitedCaptureResult:
    """Capture with sight radius l: the searchers only know the set of
    vertices the evader could occupy, refined by sightings.

    A game state is (positions, candidate set).  One round: searchers step
    jointly, candidates under a searcher are removed as captured, the rest
    split into sighted singletons and an unseen remainder (the mid-round
    split is governed by ``observe_after_cop_move``), each part grows by one
    evader step avoiding searchers, then splits again by sight.  Searchers
    win from a state if some joint step makes every resulting branch a win;
    branches with no surviving candidates are immediate wins.

    Capture_time is the worst-case number of rounds under optimal play by
    both sides (evader picks worst branch), minimized over placements.
    """
    if k < 1:
        raise BadParamError("need at least one searcher")
    if l < 0:
        raise BadParamError("sight radius must be >= 0")
    _check_game_graph(g, _CLEAN_MAX_N)
    budget = _budget(state_budget)
    n = g.n
    full = (1 << n) - 1
    cfgs, _, sights, succs = _config_tables(g, k, l)
    occ = [_occ_mask(c) for c in cfgs]
    t0, t1, t2, t3 = _nor_tables(g)

    def split(mask, sight):
        parts = []
        vis = mask & sight
        while vis:
            low = vis & -vis
            parts.append(low)
            vis ^= low
        inv = mask & ~sight
        if inv:
            parts.append(inv)
        return parts

    def expand(mask, occ2):
        nb = (
            t0[mask & 255] | t1[(mask >> 8) & 255]
            | t2[(mask >> 16) & 255] | t3[(mask >> 24) & 255]
        )
        return (mask | nb) & ~occ2

    # forward exploration
    state_id: dict[int, int] = {}
    id_state: list[int] = []
    moves_of: list[list[list[int]]] = []   # per state, per move, successor ids
    stack = []

    def intern(c2, piece):
        key = c2 << n | piece
        sid = state_id.get(key)
        if sid is None:
            sid = len(id_state)
            if sid >= budget:
                raise TooLargeError(
                    f"candidate-set space exceeds budget {budget}", partial=None
                )
            state_id[key] = sid
            id_state.append(key)
            moves_of.append([])
            stack.append(sid)
        return sid

    init_by_cfg = {}
    for ci in _initial_reps(g, cfgs, symmetry):
        s = sights[ci]
        o = occ[ci]
        pieces = split(full & ~o, s)
        init_by_cfg[ci] = [intern(ci, p) for p in pieces]

    while stack:
        sid = stack.pop()
        key = id_state[sid]
        c, S = key >> n, key & full
        mvs = []
        for c2 in succs[c]:
            o2 = occ[c2]
            s2 = sights[c2]
            S0 = S & ~o2
            if S0 == 0:
                mvs.append([])
                continue
            mid = split(S0, s2) if observe_after_cop_move else [S0]
            branch_ids = set()
            for piece in mid:
                grown = expand(piece, o2)
                for part in split(grown, s2):
                    branch_ids.add(intern(c2, part))
            mvs.append(sorted(branch_ids))
        moves_of[sid] = mvs

    nstates = len(id_state)

    # least fixpoint: state wins iff some move has all branches winning
    counters = []
    rev: list[list[tuple[int, int]]] = [[] for _ in range(nstates)]
    for sid in range(nstates):
        cnts = []
        for mi, branch in enumerate(moves_of[sid]):
            cnts.append(len(branch))
            for b in branch:
                rev[b].append((sid, mi))
        counters.append(cnts)

    win_via = [-1] * nstates      # winning move index, -1 unknown
    queue = []
    for sid in range(nstates):
        for mi, cnt in enumerate(counters[sid]):
            if cnt == 0:
                win_via[sid] = mi
                queue.append(sid)
                break
    qi = 0
    while qi < len(queue):
        sid = queue[qi]
        qi += 1
        for psid, mi in rev[sid]:
            if win_via[psid] != -1:
                continue
            counters[psid][mi] -= 1
            if counters[psid][mi] == 0:
                win_via[psid] = mi
                queue.append(psid)

    # minimax round counts on the winning region, buckets in increasing value
    NONE = -1
    mtime = [NONE] * nstates
    mv_counters = [[len(b) for b in moves_of[sid]] for sid in range(nstates)]
    buckets: dict[int, list[int]] = {}
    for sid in range(nstates):
        if any(cnt == 0 for cnt in mv_counters[sid]):
            mtime[sid] = 1
            buckets.setdefault(1, []).append(sid)
    while buckets:
        val = min(buckets)
        for sid in buckets.pop(val):
            for psid, mi in rev[sid]:
                if mtime[psid] != NONE:
                    continue
                mv_counters[psid][mi] -= 1
                if mv_counters[psid][mi] == 0:
                    mtime[psid] = val + 1
                    buckets.setdefault(val + 1, []).append(psid)

    best_time = None
    best_cfg = None
    win = False
    for ci, pieces in init_by_cfg.items():
        if all(win_via[p] != -1 for p in pieces):
            win = True
            if any(mtime[p] == NONE for p in pieces):
                continue
            t = max((mtime[p] for p in pieces), default=0)
            if best_time is None or t < best_time:
                best_time = t
                best_cfg = cfgs[ci]
    return LimitedCaptureResult(
        k=k, l=l, capture=win, capture_time=best_time,
        placement=best_cfg, states=nstates,
    )


def capture_possible_limited(g: Graph, k: int, l: int, **kw) -> bool:
    return limited_capture_solve(g, k, l, **kw).capture


def capture_number_limited(g: Graph, l: int, state_budget: Optional[int] = None) -> int:
    """Fewest searchers with sight l that can guarantee capture."""
    for k in range(1, g.n + 1):
        if limited_capture_solve(g, k, l, state_budget=state_budget).capture:
            return k
    raise BadParamError("unreachable: searchers on every vertex capture at placement")


def belief_capture_time(g: Graph, k: int, l: int, **kw) -> Optional[int]:
    """Worst-case rounds to capture under limited sight; None if the
    searchers cannot force capture."""
    res = limited_capture_solve(g, k, l, **kw)
    return res.capture_time if res.capture else None
