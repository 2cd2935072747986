from itertools import chain, combinations

import pytest

from rectstab.approx import (
    GuessInfeasible,
    SearchStats,
    assemble_2sat,
    eliminate_redundant,
    enumerate_horizontal_guesses,
    enumerate_vertical_guesses,
    preselect,
    solve_min,
    solve_with_budget,
)
from rectstab.core import (
    Axis,
    Instance,
    Rect,
    Solution,
    Strip,
    separated,
    strips_of,
    transpose,
    verify,
)
from rectstab.exact import SearchBudget, opt_exact
from rectstab.generators import gen_planted
from rectstab.twosat import solve as solve_2sat

H, V = Axis.HORIZONTAL, Axis.VERTICAL


# ---------------------------------------------------------------- preselect

def test_preselect_no_rectangles():
    inst = Instance([], hlines=[1, 2], vlines=[3])
    assert preselect(inst, 0) == ((), ())


def test_preselect_hand_trace():
    inst = Instance(
        [Rect(0, 1, 0, 1), Rect(0, 1, 3, 4)],
        hlines=[0, 1, 2, 3, 4, 5],
        vlines=[0, 1],
    )
    h1, v0 = preselect(inst, 1)
    assert h1 == ()
    assert v0 == (1,)


def test_preselect_infeasible_gap():
    # two x-disjoint rects strictly between consecutive horizontal candidates
    inst = Instance(
        [Rect(0, 1, 1, 2), Rect(5, 6, 1, 2)],
        hlines=[0, 3],
        vlines=[0, 5],
    )
    with pytest.raises(GuessInfeasible):
        preselect(inst, 1)
    h1, v0 = preselect(inst, 2)  # budget 2 is enough
    assert h1 == () and v0 == (0, 5)


def test_preselect_infeasible_leftover():
    inst = Instance([Rect(0, 1, 0, 1)], hlines=[5], vlines=[])
    with pytest.raises(GuessInfeasible):
        preselect(inst, 1)


def test_preselect_v0_accounting_bound():
    for seed in range(20):
        inst, witness = gen_planted(k=4, n=25, coord_range=30, seed=seed)
        k_v = len(witness.vstar)
        try:
            h1, v0 = preselect(inst, k_v)
        except GuessInfeasible:
            continue
        assert len(v0) <= k_v * (len(h1) + 1)


def test_preselect_nicely_positioned_wrt_witness():
    hits = 0
    for seed in range(40):
        inst, witness = gen_planted(k=4, n=20, coord_range=25, seed=seed)
        k_v = len(witness.vstar)
        hstar = sorted(witness.hstar)
        h1, _ = preselect(inst, k_v)
        assert len(h1) <= len(witness.hstar)
        prev = None
        for y in h1:
            assert any((prev is None or h > prev) and h <= y for h in hstar)
            prev = y
        hits += bool(h1)
    assert hits > 5  # the suite must exercise nonempty preselections


# ------------------------------------------------------------- enumerations

def brute_vertical_guesses(v0, k_v):
    strips = strips_of(V, sorted(v0))
    budget = (3 * k_v) // 2
    found = set()
    idx = range(len(strips))
    for strip_sub in chain.from_iterable(combinations(idx, n) for n in range(len(strips) + 1)):
        for line_sub in chain.from_iterable(
            combinations(sorted(v0), n) for n in range(len(v0) + 1)
        ):
            chosen = tuple(strips[i] for i in strip_sub)
            if len(chosen) + len(line_sub) > budget:
                continue
            if separated(chosen, line_sub):
                found.add((chosen, frozenset(line_sub)))
    return found


def test_vertical_guesses_match_exhaustive_oracle():
    for v0, k_v in (((), 0), ((5,), 2), ((0, 5), 2), ((0, 5, 9), 3)):
        got = [(g.gamma_v, g.v1) for g in enumerate_vertical_guesses(v0, k_v)]
        assert len(set(got)) == len(got)  # no duplicates
        assert set(got) == brute_vertical_guesses(v0, k_v)
        sizes = [len(a) + len(b) for a, b in got]
        assert sizes == sorted(sizes)  # nondecreasing combined size


def test_vertical_guesses_single_position_examples():
    got = {(g.gamma_v, g.v1) for g in enumerate_vertical_guesses((5,), 2)}
    assert (tuple([Strip(V, None, 5)]), frozenset()) in got
    assert (tuple([Strip(V, 5, None)]), frozenset({5})) in got
    assert ((Strip(V, None, 5), Strip(V, 5, None)), frozenset({5})) in got
    # unseparated pair must be absent
    assert ((Strip(V, None, 5), Strip(V, 5, None)), frozenset()) not in got


def test_vertical_guess_empty_pool():
    assert [(g.gamma_v, g.v1) for g in enumerate_vertical_guesses((), 0)] == [((), frozenset())]


def test_horizontal_guesses_budget_and_separation():
    h1 = (0, 10)
    h0 = (4, 7, 20)
    # |H1| = 2k_h exhausts the budget: only the empty guess fits
    got = list(enumerate_horizontal_guesses(h1, h0, 1))
    assert [(g.gamma_h, g.h1prime) for g in got] == [((), frozenset())]

    got3 = list(enumerate_horizontal_guesses(h1, h0, 3))
    assert all(
        len(h1) + len(g.gamma_h) + len(g.h1prime) <= 6 and separated(g.gamma_h, set(h1) | g.h1prime)
        for g in got3
    )
    assert all(g.h1prime <= set(h0) for g in got3)
    # H1 lines are free separators: adjacent strips around 0 can both be chosen
    strips = strips_of(H, sorted(set(h1) | set(h0)))
    pair = (strips[0], strips[1])
    assert any(g.gamma_h == pair and not g.h1prime for g in got3)


def brute_horizontal_guesses(h1, h0, k_h):
    base = sorted(set(h1) | set(h0))
    strips = strips_of(H, base)
    budget = 2 * k_h - len(h1)
    found = set()
    if budget < 0:
        return found
    idx = range(len(strips))
    for strip_sub in chain.from_iterable(combinations(idx, n) for n in range(len(strips) + 1)):
        for line_sub in chain.from_iterable(
            combinations(sorted(set(h0) - set(h1)), n) for n in range(len(h0) + 1)
        ):
            chosen = tuple(strips[i] for i in strip_sub)
            if len(chosen) + len(line_sub) > budget:
                continue
            if separated(chosen, set(h1) | set(line_sub)):
                found.add((chosen, frozenset(line_sub)))
    return found


def test_horizontal_guesses_match_exhaustive_oracle():
    cases = (
        ((), (), 0),
        ((), (3,), 1),
        ((0,), (4, 9), 2),
        ((0, 10), (4, 7, 20), 3),
    )
    for h1, h0, k_h in cases:
        got = [(g.gamma_h, g.h1prime) for g in enumerate_horizontal_guesses(h1, h0, k_h)]
        assert len(set(got)) == len(got)
        assert set(got) == brute_horizontal_guesses(h1, h0, k_h)


def test_horizontal_guesses_empty():
    assert [(g.gamma_h, g.h1prime) for g in enumerate_horizontal_guesses((), (), 0)] == [
        ((), frozenset())
    ]


def test_horizontal_guesses_overfull_h1_yields_nothing():
    assert list(enumerate_horizontal_guesses((0, 1, 2), (), 1)) == []


# ------------------------------------------------------- eliminate_redundant

def _widest_fixture():
    # four narrow rects touch the strip boundary x=0 (two share a horizontal
    # line), plus one wide rect crossing the whole strip (0, 10)
    narrows = [
        Rect(-2, 1, 0, 1),
        Rect(-2, 1, 10, 11),
        Rect(-2, 1, 20, 21),
        Rect(-2, 1, 20, 21),
    ]
    wide = Rect(-5, 9, 40, 41)
    inst = Instance(
        narrows + [wide],
        hlines=[0, 10, 20, 30, 40],
        vlines=[0, 3, 5, 10],
    )
    gamma_v = (Strip(V, 0, 10),)
    return inst, gamma_v, wide


def test_eliminate_noop_without_strips():
    inst, _, _ = _widest_fixture()
    kept, h0 = eliminate_redundant(inst, h1=(), v1=frozenset(), gamma_v=(), k=1)
    assert kept == list(inst.rects)
    assert h0 == (0, 10, 20, 40)


def test_eliminate_removes_widest_only():
    inst, gamma_v, wide = _widest_fixture()
    kept, h0 = eliminate_redundant(inst, h1=(), v1=frozenset(), gamma_v=gamma_v, k=1)
    assert wide not in kept
    assert len(kept) == 4
    assert h0 == (0, 10, 20)


def test_eliminate_extension_property():
    # any stabbing of the kept rects by <=2k horizontal lines plus one line
    # per guessed strip extends to the removed ones (k=1 here)
    inst, gamma_v, wide = _widest_fixture()
    kept, _ = eliminate_redundant(inst, h1=(), v1=frozenset(), gamma_v=gamma_v, k=1)
    in_strip = [x for x in inst.vlines if gamma_v[0].contains_pos(x)]
    for a in chain.from_iterable(combinations(inst.hlines, n) for n in range(3)):
        for v in in_strip:
            sol = Solution(hlines=a, vlines=[v])
            kept_ok = all(
                any(y1 <= y <= y2 for y in a) or x1 <= v <= x2
                for x1, x2, y1, y2 in ((r.x1, r.x2, r.y1, r.y2) for r in kept)
            )
            if kept_ok:
                assert verify(inst, sol) == []


def test_eliminate_h0_accounting_bound_on_planted():
    for seed in range(12):
        inst, witness = gen_planted(k=3, n=20, coord_range=25, seed=seed)
        k = 3
        k_v = len(witness.vstar)
        try:
            h1, v0 = preselect(inst, k_v)
        except GuessInfeasible:
            continue
        gamma_v, v1 = witness_vertical_guess(v0, sorted(witness.vstar))
        kept, h0 = eliminate_redundant(inst, h1, v1, gamma_v, k)
        boundaries = {b for s in gamma_v for b in (s.lo, s.hi) if b is not None}
        assert len(h0) <= (2 * k + 1) * len(boundaries) + k


# ------------------------------------- witness-guided guesses (oracle)

def witness_vertical_guess(v0, vstar):
    """The strip/line guess a size-|vstar| vertical witness induces: odd light
    strips become the guess, boundaries of the others plus witness lines
    already in the pool become separators."""
    strips = strips_of(V, sorted(v0))
    light = [s for s in strips if sum(1 for v in vstar if s.contains_pos(v)) == 1]
    heavy = [s for s in strips if sum(1 for v in vstar if s.contains_pos(v)) >= 2]
    gamma_v = tuple(light[0::2])
    v1 = set(v0) & set(vstar)
    for s in light[1::2] + heavy:
        v1.update(b for b in (s.lo, s.hi) if b is not None)
    k_v = len(vstar)
    assert len(gamma_v) + len(v1) <= (3 * k_v) // 2
    assert separated(gamma_v, v1)
    return gamma_v, frozenset(v1)


def witness_horizontal_guess(h1, h0, hstar, k_h):
    """All light strips of the H1+H0 arrangement, separated by heavy-strip
    boundaries, pool witness lines, and patch lines between consecutive
    unseparated light strips."""
    base = sorted(set(h1) | set(h0))
    strips = strips_of(H, base)
    light = [s for s in strips if sum(1 for h in hstar if s.contains_pos(h)) == 1]
    heavy = [s for s in strips if sum(1 for h in hstar if s.contains_pos(h)) >= 2]
    gamma_h = tuple(light)
    h1p = set(h0) & set(hstar)
    for s in heavy:
        h1p.update(b for b in (s.lo, s.hi) if b is not None and b in set(h0))
    for a, b in zip(light, light[1:]):
        if not separated((a, b), set(h1) | h1p):
            patch = [p for p in h0 if a.hi <= p <= b.lo]
            assert patch, "an H0 separator must exist between unseparated light strips"
            h1p.add(patch[0])
    assert len(h1) + len(gamma_h) + len(h1p) <= 2 * k_h
    assert separated(gamma_h, set(h1) | h1p)
    return gamma_h, frozenset(h1p)


def test_witness_guided_pipeline_is_satisfiable():
    """Drive the witness-constructed guesses end to end: the resulting 2-SAT
    must be satisfiable and decode into a verified solution."""
    ran = 0
    for seed in range(30):
        k = 4
        inst, witness = gen_planted(k=k, n=18, coord_range=25, seed=seed)
        work = inst
        hstar, vstar = sorted(witness.hstar), sorted(witness.vstar)
        if len(hstar) > len(vstar):
            work = transpose(inst)
            hstar, vstar = vstar, hstar
        k_h, k_v = len(hstar), len(vstar)
        h1, v0 = preselect(work, k_v)
        gamma_v, v1 = witness_vertical_guess(v0, vstar)
        kept, h0 = eliminate_redundant(work, h1, v1, gamma_v, k)
        gamma_h, h1p = witness_horizontal_guess(h1, h0, hstar, k_h)
        base_h = sorted(set(h1) | h1p)
        kprime = [
            r
            for r in kept
            if not any(r.y1 <= y <= r.y2 for y in base_h)
            and not any(r.x1 <= x <= r.x2 for x in v1)
        ]
        formula, decode = assemble_2sat(kprime, gamma_v, gamma_h, work)
        values = solve_2sat(formula)
        assert values is not None
        h2, v2 = decode(values)
        sol = Solution(hlines=set(h1) | h1p | h2, vlines=set(v1) | v2)
        assert verify(work, sol) == []
        assert len(sol) <= 2 * k_h + (3 * k_v) // 2
        ran += 1
    assert ran == 30


# -------------------------------------------------------------- assemble_2sat

def test_assemble_empty_kernel_decodes_one_line_per_strip():
    inst = Instance([], hlines=[0, 4, 8], vlines=[0, 4, 8])
    gamma_v = (Strip(V, 0, 8),)
    gamma_h = (Strip(H, 0, 8),)
    formula, decode = assemble_2sat([], gamma_v, gamma_h, inst)
    values = solve_2sat(formula)
    assert values is not None
    h2, v2 = decode(values)
    assert len(h2) == 1 and len(v2) == 1
    assert h2 == {4} and v2 == {4}


def test_assemble_rejects_empty_strip():
    inst = Instance([], hlines=[], vlines=[0, 8])
    with pytest.raises(GuessInfeasible):
        assemble_2sat([], (Strip(V, 0, 8),), (), Instance([], [], [0, 8]))


def test_assemble_window_thresholds():
    # candidates v1..v5 at 1..5 inside strip (0,6); rect stabbable by {3,4}
    inst = Instance([], hlines=[], vlines=[0, 1, 2, 3, 4, 5, 6])
    strip = Strip(V, 0, 6)
    rect = Rect(3, 4, 0, 1)
    formula, decode = assemble_2sat([rect], (strip,), (), inst)
    sat_choices = set()
    # enumerate the five monotone threshold assignments and check which satisfy
    for cut in range(1, 6):
        values = [t < cut for t in range(5)]
        ok = all(
            (values[a[0]] != a[1]) or (values[b[0]] != b[1]) for a, b in formula.clauses
        )
        if ok:
            sat_choices.add(cut)  # decoded line = candidate index cut-1 -> position cut
    assert sat_choices == {3, 4}
    values = solve_2sat(formula)
    assert values is not None
    _, v2 = decode(values)
    assert v2 <= {3, 4} and len(v2) == 1


def test_assemble_unstabbable_rect_in_both_strips_is_unsat():
    inst = Instance([], hlines=[0, 9], vlines=[0, 9])
    gamma_v = (Strip(V, 0, 9),)
    gamma_h = (Strip(H, 0, 9),)
    # the rect meets both strips but contains no interior candidate on either axis
    rect = Rect(2, 3, 2, 3)
    inst = Instance([rect], hlines=[0, 9], vlines=[0, 9])
    with pytest.raises(GuessInfeasible):
        # strips have no interior candidates at all: rejected upfront
        assemble_2sat([rect], gamma_v, gamma_h, inst)
    inst2 = Instance([rect], hlines=[0, 5, 9], vlines=[0, 5, 9])
    formula, _ = assemble_2sat([rect], gamma_v, gamma_h, inst2)
    assert solve_2sat(formula) is None


def test_assemble_rect_meeting_no_strip_is_guess_infeasible():
    inst = Instance([Rect(20, 21, 20, 21)], hlines=[0, 5, 9], vlines=[0, 5, 9])
    with pytest.raises(GuessInfeasible):
        assemble_2sat(list(inst.rects), (Strip(V, 0, 9),), (Strip(H, 0, 9),), inst)


# ------------------------------------------------------------ full pipeline

def test_solve_empty_instance_with_zero_budget():
    sol = solve_with_budget(Instance([], [], []), 0)
    assert sol is not None and len(sol) == 0


def test_solve_single_rect():
    inst = Instance([Rect(0, 1, 0, 1)], hlines=[], vlines=[0])
    sol = solve_with_budget(inst, 1)
    assert sol == Solution(vlines=[0])
    assert len(sol) <= (7 * 1) // 4


def test_solve_zero_budget_nonempty():
    inst = Instance([Rect(0, 1, 0, 1)], hlines=[], vlines=[0])
    assert solve_with_budget(inst, 0) is None


def test_solve_planted_suite_small():
    for seed in range(15):
        k = 2 + seed % 3
        inst, _ = gen_planted(k=k, n=15, coord_range=20, seed=seed)
        stats = SearchStats()
        sol = solve_with_budget(inst, k, stats)
        assert sol is not None, f"seed {seed}: planted instance must not be NoWitness"
        assert verify(inst, sol) == []
        assert len(sol) <= (7 * k) // 4
        assert stats.splits >= 1


def test_solve_never_worse_than_7_4_of_opt():
    for seed in range(10):
        inst, _ = gen_planted(k=3, n=12, coord_range=15, seed=100 + seed)
        exact_sol = opt_exact(inst, SearchBudget(max_size=3))
        assert exact_sol is not None
        opt = len(exact_sol)
        sol = solve_with_budget(inst, max(opt, 0), SearchStats())
        assert sol is not None
        assert len(sol) <= (7 * opt) // 4


def test_solve_min_returns_first_success():
    inst = Instance([], [], [])
    assert solve_min(inst, 3) == (0, Solution())

    inst2, _ = gen_planted(k=2, n=8, coord_range=12, seed=5)
    exact_sol = opt_exact(inst2, SearchBudget(max_size=2))
    found = solve_min(inst2, 2)
    assert found is not None
    k, sol = found
    assert k <= len(exact_sol)
    assert verify(inst2, sol) == []
    assert len(sol) <= (7 * k) // 4


def test_solve_min_below_opt_is_nowitness():
    # opt = 2: two far-apart rects
    inst = Instance(
        [Rect(0, 1, 0, 1), Rect(50, 51, 50, 51)],
        hlines=[0, 50],
        vlines=[],
    )
    assert opt_exact(inst, SearchBudget(max_size=1)) is None
    assert solve_min(inst, 1) is None
    found = solve_min(inst, 2)
    assert found is not None and found[0] == 2


def test_transpose_coherence():
    for seed in range(8):
        inst, _ = gen_planted(k=2, n=10, coord_range=15, seed=200 + seed)
        for k in (1, 2):
            a = solve_with_budget(inst, k)
            b = solve_with_budget(transpose(inst), k)
            assert (a is None) == (b is None)
            if a is not None:
                assert verify(transpose(inst), b) == []


def test_guess_streams_respect_invariants_under_pipeline():
    inst, witness = gen_planted(k=3, n=12, coord_range=15, seed=9)
    k_v = 2
    try:
        h1, v0 = preselect(inst, k_v)
    except GuessInfeasible:
        pytest.skip("split infeasible for this fixture")
    for g in enumerate_vertical_guesses(v0, k_v):
        assert g.size() <= (3 * k_v) // 2
        assert separated(g.gamma_v, g.v1)
