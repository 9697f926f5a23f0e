import random

import pytest

from copclean.cleaning import run_script
from copclean.construction import (
    ConstructionSpec,
    build_construction,
    check_blocking,
    check_middle_dominating,
    default_partition,
    scripted_seeing_strategy,
    spacing_ok,
)
from copclean.errors import BadParamError

ADVERSARIAL = ((0, 2), (1, 5), (3, 6), (4, 7))


def build(k=2, m=8, partition=None, allow_bad=False):
    return build_construction(
        ConstructionSpec(k=k, m=m, partition=partition), allow_bad_spacing=allow_bad
    )


def blocked_types_literal(cg, ev, se):
    """Clean-room recount of the interference set, straight off adjacency."""
    g = cg.graph
    i, a = cg.block_of(ev), cg.residue_of(ev)
    mask = (1 << cg.m) - 1
    se_adj = set(g.neighbors(se))
    out = []
    for q in cg.partition[i]:
        landings = [cg.vertex_id(j, (a + (1 << q)) & mask)
                    for j in range(cg.blocks) if j != i]
        if any(w == se or w in se_adj for w in landings):
            out.append(q)
    return out


def test_spec_defaults_and_validation():
    m, blocks, partition = ConstructionSpec(k=2).resolved()
    assert m == 16 and blocks == 4
    assert partition == default_partition(2, 16)
    # uneven class sizes are allowed as long as they cover every position
    ConstructionSpec(k=2, m=8, partition=((0, 3, 5), (7,), (1, 4), (2, 6))).resolved()
    with pytest.raises(BadParamError):
        ConstructionSpec(k=2, m=6).resolved()      # 2k must divide m
    with pytest.raises(BadParamError):
        ConstructionSpec(k=0).resolved()
    with pytest.raises(BadParamError):
        ConstructionSpec(k=2, m=8, partition=((0, 2), (1, 5), (3, 6))).resolved()
    with pytest.raises(BadParamError):
        ConstructionSpec(k=2, m=8, partition=((0, 0), (1, 5), (3, 6), (4, 7))).resolved()
    with pytest.raises(BadParamError):
        ConstructionSpec(k=2, m=8, partition=((0, 9), (1, 5), (3, 6), (4, 7))).resolved()


def test_default_partition_spacing():
    for k in (2, 3, 4):
        m = 4 * k * k
        part = default_partition(k, m)
        assert spacing_ok(part)
        assert sorted(q for cls in part for q in cls) == list(range(m))


def test_shape_and_degrees():
    cg = build(k=2, m=8)
    g = cg.graph
    assert g.n == 4 * 256 + 4 == 1028
    assert cg.blocks == 4 and cg.block_size == 256
    # every outside vertex: m(2k-1)/k forward+backward partners plus its hub
    out_deg = 8 * 3 // 2 + 1
    assert all(g.degree(cg.vertex_id(b, r)) == out_deg
               for b in range(4) for r in (0, 1, 100, 255))
    assert all(g.degree(cg.hub_id(b)) == 256 + 3 for b in range(4))


def test_vertex_ids_round_trip():
    cg = build(k=2, m=8)
    for b in range(4):
        for r in (0, 17, 255):
            v = cg.vertex_id(b, r)
            assert cg.block_of(v) == b and cg.residue_of(v) == r
        h = cg.hub_id(b)
        assert cg.block_of(h) is None


def test_middle_dominates():
    assert check_middle_dominating(build(k=2, m=8))


def test_spacing_enforced_unless_escaped():
    with pytest.raises(BadParamError):
        build(k=2, m=8, partition=ADVERSARIAL)
    cg = build(k=2, m=8, partition=ADVERSARIAL, allow_bad=True)
    assert not spacing_ok(cg.partition)


def test_blocking_exhaustive_default_partition():
    rep = check_blocking(build(k=2, m=8), mode="exhaustive")
    assert rep.passed and rep.max_blocked == 1
    assert rep.checked_pairs == 1024 * 1023
    assert rep.violations == []
    d = rep.to_dict()
    assert d["mode"] == "exhaustive" and d["passed"] is True


def test_blocking_matches_literal_recount_small():
    # full literal pass over every ordered pair at m=4, no translation trick
    cg = build(k=2, m=4)
    outside = 4 * 16
    worst = 0
    for ev in range(outside):
        for se in range(outside):
            if ev != se:
                worst = max(worst, len(blocked_types_literal(cg, ev, se)))
    rep = check_blocking(cg, mode="exhaustive")
    assert rep.max_blocked == worst
    assert rep.passed == (worst <= 1)


def test_blocking_translation_invariance():
    # residue shifts are automorphisms; the exhaustive walk relies on this
    cg = build(k=2, m=8)
    rng = random.Random(3)
    mask = 255
    for _ in range(300):
        eb, er = rng.randrange(4), rng.randrange(256)
        sb, sr = rng.randrange(4), rng.randrange(256)
        if (eb, er) == (sb, sr):
            continue
        t = rng.randrange(256)
        base = blocked_types_literal(cg, cg.vertex_id(eb, er), cg.vertex_id(sb, sr))
        shifted = blocked_types_literal(
            cg, cg.vertex_id(eb, (er + t) & mask), cg.vertex_id(sb, (sr + t) & mask)
        )
        assert base == shifted
        assert len(base) <= 1


def test_adversarial_partition_violates():
    cg = build(k=2, m=8, partition=ADVERSARIAL, allow_bad=True)
    rep = check_blocking(cg, mode="exhaustive")
    assert not rep.passed
    assert rep.max_blocked == 2
    assert any(v["delta"] == 3 and v["types"] == [0, 2] for v in rep.violations)
    # the same pair re-judged straight off adjacency
    ev = cg.vertex_id(0, 0)
    se = cg.vertex_id(0, 3)
    assert blocked_types_literal(cg, ev, se) == [0, 2]


def test_blocking_sampled_deterministic():
    cg = build(k=2, m=8)
    a = check_blocking(cg, mode="sampled", samples=2000, seed=9)
    b = check_blocking(cg, mode="sampled", samples=2000, seed=9)
    assert a.to_dict() == b.to_dict()
    assert a.passed and a.checked_pairs == 2000
    with pytest.raises(BadParamError):
        check_blocking(cg, mode="quick")


def test_scripted_strategy_cleans_on_first_turn():
    cg = build(k=2, m=8)
    script = scripted_seeing_strategy(cg)
    assert script.l == 1
    trace = run_script(cg.graph, script)
    assert trace.fully_cleaned_at == 1
    # one searcher short leaves gas everywhere it cannot reach
    short = run_script(cg.graph, scripted_seeing_strategy(cg, cops=1))
    assert short.fully_cleaned_at is None
    assert short.min_gas > 0
