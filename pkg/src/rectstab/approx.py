"""Parameterized 7/4-approximation for rectangle stabbing.

Given a budget k, the solver guesses how an unknown size-k solution splits
into k_h horizontal and k_v vertical lines (k_h <= k_v after transposing),
then per split:

  1. greedily preselects horizontal lines H1 and an auxiliary vertical
     candidate pool V0 that together stab everything,
  2. enumerates guesses of vertical strips (each believed to hold exactly
     one solution line) separated by chosen lines V1,
  3. prunes rectangles that any viable completion stabs anyway, yielding a
     kernel K and a horizontal candidate pool H0,
  4. enumerates horizontal strip guesses separated by H1 plus chosen H1',
  5. encodes "pick one line inside every guessed strip so the kernel is
     stabbed" as a 2-SAT formula.

Any satisfiable guess assembles a verified solution of size at most
2*k_h + floor(3*k_v/2) <= floor(7k/4); exhausting every guess certifies
that no size-k solution exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from . import twosat
from .core import (
    Axis,
    Instance,
    Rect,
    Solution,
    Strip,
    rect_meets_strip,
    rect_stabbed_by,
    separated,
    strips_of,
    transpose,
    verify,
)
from .greedy1d import Infeasible, IntervalSet, stab_1d


class GuessInfeasible(Exception):
    """The current split or guess cannot be completed to a solution."""


@dataclass(frozen=True)
class BudgetSplit:
    """A guessed division of the budget into horizontal and vertical lines."""

    k_h: int
    k_v: int

    def __post_init__(self) -> None:
        if self.k_h < 0 or self.k_v < 0:
            raise ValueError("split parts must be nonnegative")

    def normalized(self) -> "BudgetSplit":
        """The executed orientation: horizontal part never exceeds vertical."""
        if self.k_h <= self.k_v:
            return self
        return BudgetSplit(k_h=self.k_v, k_v=self.k_h)


def iter_splits(k: int) -> Iterator[BudgetSplit]:
    """All splits with k_h + k_v <= k, ascending total then ascending k_h."""
    for total in range(k + 1):
        for k_h in range(total + 1):
            yield BudgetSplit(k_h=k_h, k_v=total - k_h)


@dataclass(frozen=True)
class VerticalGuess:
    gamma_v: tuple[Strip, ...]
    v1: frozenset[int]

    def size(self) -> int:
        return len(self.gamma_v) + len(self.v1)


@dataclass(frozen=True)
class HorizontalGuess:
    gamma_h: tuple[Strip, ...]
    h1prime: frozenset[int]


@dataclass
class SearchStats:
    """Counters over the guess search, for run reports."""

    splits: int = 0
    vertical_guesses: int = 0
    horizontal_guesses: int = 0
    twosat_calls: int = 0


def _stab_positions(rects: Sequence[Rect], positions: Sequence[int], axis: Axis) -> list[int]:
    iv = IntervalSet([r.interval(axis) for r in rects], positions)
    return stab_1d(iv)


def preselect(inst: Instance, k_v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Greedy horizontal preselection: (H1, V0).

    Sweeping bottom-up from a sentinel below all rectangles, repeatedly
    jump to the furthest candidate line such that the rectangles strictly
    between the current line and it are stabbable by at most k_v vertical
    candidates, collecting the jump targets into H1; V0 then stabs whatever
    H1 missed. Raises GuessInfeasible when some gap between consecutive
    candidates already needs more than k_v vertical lines, or the leftover
    rectangles cannot be stabbed vertically at all: no solution with k_v
    vertical lines exists.

    Always satisfies |V0| <= k_v * (|H1| + 1); when a solution whose
    vertical part has size k_v exists, H1 additionally has at most as many
    lines as that solution's horizontal part and tracks it gap by gap.
    """
    rects = inst.rects
    hpos = inst.hlines
    vpos = inst.vlines
    m = len(hpos)
    if rects:
        below = min(r.y1 for r in rects) - 1
        above = max(r.y2 for r in rects) + 1
    else:
        below, above = 0, 1
    # sentinel positions; sentinels are never added to H1
    pos_of = [below] + [p for p in hpos] + [max(above, (hpos[-1] + 1) if hpos else above)]

    def opt_le_kv(intervals: list[tuple[int, int]]) -> bool:
        try:
            return len(stab_1d(IntervalSet(intervals, vpos))) <= k_v
        except Infeasible:
            return False

    by_top = sorted(range(len(rects)), key=lambda i: rects[i].y2)
    h1: list[int] = []
    i = 0
    while i <= m:
        anchor = pos_of[i]
        acc: list[tuple[int, int]] = []
        ptr = 0
        j_star = None
        for j in range(i + 1, m + 2):
            top = pos_of[j]
            while ptr < len(by_top) and rects[by_top[ptr]].y2 < top:
                r = rects[by_top[ptr]]
                if r.y1 > anchor:
                    acc.append((r.x1, r.x2))
                ptr += 1
            if opt_le_kv(acc):
                j_star = j
            else:
                break  # infeasibility is monotone in j
        if j_star is None:
            raise GuessInfeasible(
                f"rectangles between consecutive horizontal candidates need more than {k_v} vertical lines"
            )
        if j_star <= m:
            h1.append(pos_of[j_star])
        i = j_star

    h1set = sorted(h1)
    leftover = [r for r in rects if not rect_stabbed_by(r, h1set, ())]
    try:
        v0 = _stab_positions(leftover, vpos, Axis.VERTICAL)
    except Infeasible as exc:
        raise GuessInfeasible("leftover rectangles are not vertically stabbable") from exc
    assert len(v0) <= k_v * (len(h1set) + 1), "vertical pool exceeded its per-gap accounting bound"
    return tuple(h1set), tuple(v0)


def _separated_index_combo(strip_idx: tuple[int, ...], line_idx_set: frozenset[int]) -> bool:
    # line t (0-based among base positions) separates strips i < j iff i <= t <= j-1
    for a, b in zip(strip_idx, strip_idx[1:]):
        if not any(a <= t <= b - 1 for t in line_idx_set):
            return False
    return True


def enumerate_vertical_guesses(v0: Sequence[int], k_v: int) -> Iterator[VerticalGuess]:
    """All (gamma_v, V1) with |gamma_v| + |V1| <= floor(3*k_v/2) and gamma_v
    separated by V1.

    Deterministic order: nondecreasing combined size, then fewer strips
    first, then lexicographic by strip and line index combinations.
    """
    base = tuple(sorted(v0))
    strips = strips_of(Axis.VERTICAL, base)
    budget = (3 * k_v) // 2
    for total in range(budget + 1):
        for n_strips in range(total + 1):
            n_lines = total - n_strips
            if n_strips > len(strips) or n_lines > len(base):
                continue
            for strip_combo in combinations(range(len(strips)), n_strips):
                for line_combo in combinations(range(len(base)), n_lines):
                    lines = frozenset(line_combo)
                    if not _separated_index_combo(strip_combo, lines):
                        continue
                    guess = VerticalGuess(
                        gamma_v=tuple(strips[i] for i in strip_combo),
                        v1=frozenset(base[t] for t in line_combo),
                    )
                    assert separated(guess.gamma_v, guess.v1)
                    yield guess


def enumerate_horizontal_guesses(
    h1: Sequence[int], h0: Sequence[int], k_h: int
) -> Iterator[HorizontalGuess]:
    """All (gamma_h, H1') with |H1| + |gamma_h| + |H1'| <= 2*k_h, H1' drawn
    from H0, and gamma_h (strips of the H1-union-H0 arrangement) separated
    by H1 together with H1'. Same deterministic order as the vertical
    enumeration."""
    base = tuple(sorted(set(h1) | set(h0)))
    strips = strips_of(Axis.HORIZONTAL, base)
    h1_idx = frozenset(base.index(p) for p in h1)
    h0_idx = tuple(t for t, p in enumerate(base) if p not in set(h1))
    budget = 2 * k_h - len(h1)
    if budget < 0:
        return
    for total in range(budget + 1):
        for n_strips in range(total + 1):
            n_lines = total - n_strips
            if n_strips > len(strips) or n_lines > len(h0_idx):
                continue
            for strip_combo in combinations(range(len(strips)), n_strips):
                for line_pick in combinations(h0_idx, n_lines):
                    separators = h1_idx | frozenset(line_pick)
                    if not _separated_index_combo(strip_combo, separators):
                        continue
                    guess = HorizontalGuess(
                        gamma_h=tuple(strips[i] for i in strip_combo),
                        h1prime=frozenset(base[t] for t in line_pick),
                    )
                    assert separated(guess.gamma_h, set(h1) | guess.h1prime)
                    yield guess


def _boundary_lines(strip: Strip) -> list[int]:
    out = []
    if strip.lo is not None:
        out.append(strip.lo)
    if strip.hi is not None:
        out.append(strip.hi)
    return out


def _wid_in_strip(rect: Rect, strip: Strip) -> int:
    a, b = rect.interval(strip.axis)
    lo = a if strip.lo is None else max(a, strip.lo)
    hi = b if strip.hi is None else min(b, strip.hi)
    return max(0, hi - lo)


def eliminate_redundant(
    inst: Instance,
    h1: Sequence[int],
    v1: frozenset[int],
    gamma_v: tuple[Strip, ...],
    k: int,
) -> tuple[list[Rect], tuple[int, ...]]:
    """Kernelization: (K, H0).

    Among rectangles stabbed by some horizontal candidate but missed by
    H1 and V1, repeatedly discard the widest-in-strip rectangle on a
    guessed strip boundary whose co-stabbed group needs 2k+2 horizontal
    lines; whatever a boundary line stabs that widely must be handled
    vertically, and the widest rectangle is stabbed by any in-strip
    vertical line that stabs a narrower one. K is everything kept, H0 a
    minimum horizontal stabbing of the kept leftovers.
    """
    h1s = sorted(h1)
    v1s = sorted(v1)
    hpos = inst.hlines
    rprime_idx = [
        i
        for i, r in enumerate(inst.rects)
        if rect_stabbed_by(r, hpos, ()) and not rect_stabbed_by(r, h1s, v1s)
    ]
    removed: set[int] = set()

    scan: list[tuple[Strip, int]] = []
    for strip in sorted(gamma_v, key=lambda s: (s.lo is not None, s.lo or 0)):
        for pos in _boundary_lines(strip):
            scan.append((strip, pos))

    def stabbed_by_boundary(pos: int) -> list[int]:
        return [
            i for i in rprime_idx if i not in removed and inst.rects[i].x1 <= pos <= inst.rects[i].x2
        ]

    while True:
        fired = False
        for strip, pos in scan:
            group = stabbed_by_boundary(pos)
            if not group:
                continue
            ivs = IntervalSet([(inst.rects[i].y1, inst.rects[i].y2) for i in group], hpos)
            try:
                need = len(stab_1d(ivs))
            except Infeasible:  # pragma: no cover
                raise AssertionError("group drawn from horizontally stabbable rectangles")
            if need >= 2 * k + 2:
                widest = max(group, key=lambda i: (_wid_in_strip(inst.rects[i], strip), -i))
                removed.add(widest)
                fired = True
                break  # rescan from the first boundary
        if not fired:
            break

    kept = [r for i, r in enumerate(inst.rects) if i not in removed]
    survivors = [inst.rects[i] for i in rprime_idx if i not in removed]
    h0 = _stab_positions(survivors, hpos, Axis.HORIZONTAL)
    return kept, tuple(h0)


@dataclass
class _StripVars:
    """Threshold variables of one guessed strip: candidates sorted ascending,
    var t true means "the chosen line is at or beyond candidate t"."""

    strip: Strip
    candidates: list[int]
    var_base: int

    def var(self, t: int) -> twosat.Lit:
        return (self.var_base + t, False)

    def nvar(self, t: int) -> twosat.Lit:
        return (self.var_base + t, True)


def _window(sv: _StripVars, a: int, b: int) -> Optional[tuple[int, Optional[int]]]:
    """Indices (first stabbing candidate, first non-stabbing beyond) for the
    closed extent [a, b]; None when no candidate stabs it."""
    lo = None
    hi = None
    for t, pos in enumerate(sv.candidates):
        if a <= pos <= b:
            if lo is None:
                lo = t
        elif pos > b:
            hi = t
            break
    if lo is None:
        return None
    return (lo, hi)


def assemble_2sat(
    kprime: Sequence[Rect],
    gamma_v: tuple[Strip, ...],
    gamma_h: tuple[Strip, ...],
    inst: Instance,
) -> tuple[twosat.Formula, Callable[[list[bool]], tuple[frozenset[int], frozenset[int]]]]:
    """Formula whose satisfying assignments pick one candidate line inside
    every guessed strip such that every kernel rectangle is stabbed.

    Variables are per-strip monotone thresholds, chained by ordering
    clauses; a unit clause pins the first threshold of each strip so the
    decoded set holds exactly one line per strip. Raises GuessInfeasible
    when a guessed strip has no interior candidate or some rectangle meets
    no guessed strip at all; a rectangle that meets strips but cannot be
    stabbed inside them makes the formula unsatisfiable instead.
    """
    families: list[list[_StripVars]] = []
    counter = 0
    for strips, axis in ((gamma_v, Axis.VERTICAL), (gamma_h, Axis.HORIZONTAL)):
        svs = []
        for strip in strips:
            cands = [p for p in inst.line_positions(axis) if strip.contains_pos(p)]
            if not cands:
                raise GuessInfeasible("guessed strip contains no candidate line")
            svs.append(_StripVars(strip=strip, candidates=cands, var_base=counter))
            counter += len(cands)
        families.append(svs)
    v_svs, h_svs = families

    f = twosat.Formula(num_vars=counter)
    for sv in v_svs + h_svs:
        for t in range(len(sv.candidates) - 1):
            f.add_clause(sv.nvar(t + 1), sv.var(t))  # threshold t+1 implies threshold t
        f.add_unit(sv.var(0))

    def met(svs: list[_StripVars], rect: Rect) -> Optional[_StripVars]:
        hits = [sv for sv in svs if rect_meets_strip(sv.strip, rect)]
        assert len(hits) <= 1, "kernel rectangle meets two strips of one family"
        return hits[0] if hits else None

    for rect in kprime:
        pv = met(v_svs, rect)
        qh = met(h_svs, rect)
        if pv is None and qh is None:
            raise GuessInfeasible("kernel rectangle meets no guessed strip")
        wv = _window(pv, *rect.interval(Axis.VERTICAL)) if pv is not None else None
        wh = _window(qh, *rect.interval(Axis.HORIZONTAL)) if qh is not None else None
        if pv is not None and qh is not None and wv is not None and wh is not None:
            lo_v, hi_v = wv
            lo_h, hi_h = wh
            f.add_clause(pv.var(lo_v), qh.var(lo_h))
            if hi_h is not None:
                f.add_clause(pv.var(lo_v), qh.nvar(hi_h))
            if hi_v is not None:
                f.add_clause(pv.nvar(hi_v), qh.var(lo_h))
            if hi_v is not None and hi_h is not None:
                f.add_clause(pv.nvar(hi_v), qh.nvar(hi_h))
            continue
        # at most one side can still stab the rectangle
        side, window = (pv, wv) if wv is not None else (qh, wh)
        if window is None:
            anchor = pv if pv is not None else qh
            f.add_unit(anchor.var(0))
            f.add_unit(anchor.nvar(0))  # unstabbable under this guess
            continue
        lo, hi = window
        f.add_unit(side.var(lo))
        if hi is not None:
            f.add_unit(side.nvar(hi))

    def decode(values: list[bool]) -> tuple[frozenset[int], frozenset[int]]:
        def pick(sv: _StripVars) -> int:
            t = max(t for t in range(len(sv.candidates)) if values[sv.var_base + t])
            return sv.candidates[t]

        h2 = frozenset(pick(sv) for sv in h_svs)
        v2 = frozenset(pick(sv) for sv in v_svs)
        return h2, v2

    return f, decode


def _strip_interior_candidates(strips: list[Strip], positions: Sequence[int]) -> list[bool]:
    return [any(s.contains_pos(p) for p in positions) for s in strips]


def _run_split(
    inst: Instance, k_h: int, k_v: int, k: int, stats: SearchStats
) -> Optional[Solution]:
    try:
        h1, v0 = preselect(inst, k_v)
    except GuessInfeasible:
        return None
    if len(h1) > 2 * k_h:
        return None  # no horizontal guess can fit the budget

    # Rectangles no horizontal candidate can stab must be covered by V1 or a
    # viable guessed vertical strip; prune vertical guesses that cannot.
    vstrips = strips_of(Axis.VERTICAL, list(v0))
    strip_has_cand = {
        s: ok for s, ok in zip(vstrips, _strip_interior_candidates(vstrips, inst.vlines))
    }
    v_only = [r for r in inst.rects if not rect_stabbed_by(r, inst.hlines, ())]

    for vg in enumerate_vertical_guesses(v0, k_v):
        stats.vertical_guesses += 1
        if any(not strip_has_cand[s] for s in vg.gamma_v):
            continue
        v1s = sorted(vg.v1)
        viable = True
        for r in v_only:
            if rect_stabbed_by(r, (), v1s):
                continue
            if not any(rect_meets_strip(s, r) for s in vg.gamma_v):
                viable = False
                break
        if not viable:
            continue
        kept, h0 = eliminate_redundant(inst, h1, vg.v1, vg.gamma_v, k)
        hbase = sorted(set(h1) | set(h0))
        hstrips = strips_of(Axis.HORIZONTAL, hbase)
        hstrip_ok = {
            s: ok for s, ok in zip(hstrips, _strip_interior_candidates(hstrips, inst.hlines))
        }
        for hg in enumerate_horizontal_guesses(h1, h0, k_h):
            stats.horizontal_guesses += 1
            if any(not hstrip_ok[s] for s in hg.gamma_h):
                continue
            base_h = sorted(set(h1) | hg.h1prime)
            kprime = [r for r in kept if not rect_stabbed_by(r, base_h, v1s)]
            try:
                formula, decode = assemble_2sat(kprime, vg.gamma_v, hg.gamma_h, inst)
            except GuessInfeasible:
                continue
            stats.twosat_calls += 1
            assignment = twosat.solve(formula)
            if assignment is None:
                continue
            h2, v2 = decode(assignment)
            sol = Solution(hlines=set(h1) | hg.h1prime | h2, vlines=vg.v1 | v2)
            assert verify(inst, sol) == [], "assembled solution must stab every rectangle"
            assert len(sol) <= 2 * k_h + (3 * k_v) // 2
            return sol
    return None


def solve_with_budget(
    inst: Instance, k: int, stats: Optional[SearchStats] = None
) -> Optional[Solution]:
    """Stabbing set of size <= floor(7k/4), or None.

    Tries every split k_h + k_v <= k in ascending total then ascending k_h,
    transposing the instance when k_h > k_v so the executed pipeline always
    has k_h <= k_v. None is returned only after every split and guess is
    exhausted, which certifies that no stabbing subset of size <= k exists.
    """
    if k < 0:
        raise ValueError("budget must be nonnegative")
    stats = stats if stats is not None else SearchStats()
    for split in iter_splits(k):
        stats.splits += 1
        norm = split.normalized()
        if norm is split:
            sol = _run_split(inst, norm.k_h, norm.k_v, k, stats)
        else:
            flipped = _run_split(transpose(inst), norm.k_h, norm.k_v, k, stats)
            sol = flipped.transpose() if flipped is not None else None
        if sol is not None:
            assert verify(inst, sol) == []
            assert len(sol) <= (7 * k) // 4
            return sol
    return None


def solve_min(
    inst: Instance, k_max: int, stats: Optional[SearchStats] = None
) -> Optional[tuple[int, Solution]]:
    """Smallest budget k <= k_max the approximation succeeds at, with its
    solution; an upper bound witness for the optimum, not the optimum."""
    for k in range(k_max + 1):
        sol = solve_with_budget(inst, k, stats)
        if sol is not None:
            return k, sol
    return None
