"""Exact-integer geometric primitives for rectangle stabbing.

Lines, closed rectangles, problem instances, solutions, and the open-strip
machinery shared by the solvers. All coordinates are plain Python integers
kept within signed 64-bit range; every value is immutable and every
operation is a pure function, so everything here is safe to share across
threads.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class Axis(Enum):
    HORIZONTAL = "h"
    VERTICAL = "v"

    def other(self) -> "Axis":
        return Axis.VERTICAL if self is Axis.HORIZONTAL else Axis.HORIZONTAL


class UnknownLineError(ValueError):
    """A solution references lines that are not instance candidates."""

    def __init__(self, lines: Sequence["Line"]):
        self.lines = tuple(lines)
        desc = ", ".join(f"{ln.axis.value}@{ln.pos}" for ln in self.lines)
        super().__init__(f"solution lines not among instance candidates: {desc}")


def _check_i64(*vals: int) -> None:
    for v in vals:
        if not isinstance(v, int):
            raise TypeError(f"coordinate {v!r} is not an integer")
        if not I64_MIN <= v <= I64_MAX:
            raise OverflowError(f"coordinate {v} outside signed 64-bit range")


@dataclass(frozen=True)
class Line:
    """An axis-parallel line: y = pos (horizontal) or x = pos (vertical)."""

    axis: Axis
    pos: int

    def __post_init__(self) -> None:
        _check_i64(self.pos)

    def __lt__(self, other: "Line") -> bool:
        if self.axis is not other.axis:
            raise ValueError("lines of different axes are not ordered")
        return self.pos < other.pos


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle [x1,x2] x [y1,y2]; zero extent allowed."""

    x1: int
    x2: int
    y1: int
    y2: int

    def __post_init__(self) -> None:
        _check_i64(self.x1, self.x2, self.y1, self.y2)
        if self.x1 > self.x2 or self.y1 > self.y2:
            raise ValueError(f"malformed rectangle {self}")

    def interval(self, axis: Axis) -> tuple[int, int]:
        """Extent crossed by lines of the given axis (x for vertical lines)."""
        if axis is Axis.VERTICAL:
            return (self.x1, self.x2)
        return (self.y1, self.y2)

    def transpose(self) -> "Rect":
        return Rect(self.y1, self.y2, self.x1, self.x2)


@dataclass(frozen=True)
class Strip:
    """Open region strictly between two parallel lines.

    lo/hi are bounding-line positions; None means unbounded on that side.
    A vertical strip is the set lo < x < hi, a horizontal one lo < y < hi.
    """

    axis: Axis
    lo: Optional[int]
    hi: Optional[int]

    def __post_init__(self) -> None:
        if self.lo is not None:
            _check_i64(self.lo)
        if self.hi is not None:
            _check_i64(self.hi)
        if self.lo is not None and self.hi is not None and self.lo >= self.hi:
            raise ValueError(f"empty strip bounds ({self.lo}, {self.hi})")

    def contains_pos(self, pos: int) -> bool:
        return (self.lo is None or pos > self.lo) and (self.hi is None or pos < self.hi)

    def meets_interval(self, a: int, b: int) -> bool:
        """Does the closed interval [a,b] intersect the open strip interior?"""
        return (self.hi is None or a < self.hi) and (self.lo is None or b > self.lo)


@dataclass(frozen=True)
class Instance:
    """A set of rectangles plus candidate lines, split by axis.

    Candidate positions are deduplicated and sorted at construction;
    duplicate rectangles are kept and treated independently.
    """

    rects: tuple[Rect, ...]
    hlines: tuple[int, ...]
    vlines: tuple[int, ...]

    def __init__(self, rects: Iterable[Rect], hlines: Iterable[int], vlines: Iterable[int]):
        object.__setattr__(self, "rects", tuple(rects))
        object.__setattr__(self, "hlines", tuple(sorted(set(hlines))))
        object.__setattr__(self, "vlines", tuple(sorted(set(vlines))))
        _check_i64(*self.hlines, *self.vlines)

    def line_positions(self, axis: Axis) -> tuple[int, ...]:
        return self.vlines if axis is Axis.VERTICAL else self.hlines

    def all_lines(self) -> list[Line]:
        return [Line(Axis.HORIZONTAL, y) for y in self.hlines] + [
            Line(Axis.VERTICAL, x) for x in self.vlines
        ]


@dataclass(frozen=True)
class Solution:
    """A chosen subset of candidate lines, by axis."""

    hlines: frozenset[int]
    vlines: frozenset[int]

    def __init__(self, hlines: Iterable[int] = (), vlines: Iterable[int] = ()):
        object.__setattr__(self, "hlines", frozenset(hlines))
        object.__setattr__(self, "vlines", frozenset(vlines))

    def __len__(self) -> int:
        return len(self.hlines) + len(self.vlines)

    def transpose(self) -> "Solution":
        return Solution(hlines=self.vlines, vlines=self.hlines)

    def lines(self) -> list[Line]:
        return [Line(Axis.HORIZONTAL, y) for y in sorted(self.hlines)] + [
            Line(Axis.VERTICAL, x) for x in sorted(self.vlines)
        ]


def stabs(line: Line, rect: Rect) -> bool:
    """True iff the line intersects the closed rectangle (boundary counts)."""
    a, b = rect.interval(line.axis)
    return a <= line.pos <= b


def _hits_sorted(points: Sequence[int], lo: int, hi: int) -> bool:
    # any point of the sorted sequence inside [lo, hi]?
    i = bisect_left(points, lo)
    return i < len(points) and points[i] <= hi


def rect_stabbed_by(rect: Rect, hlines: Sequence[int], vlines: Sequence[int]) -> bool:
    """True iff some line of the given sorted position pools stabs the rect."""
    return _hits_sorted(hlines, rect.y1, rect.y2) or _hits_sorted(vlines, rect.x1, rect.x2)


def verify(inst: Instance, sol: Solution) -> list[Rect]:
    """Return the rectangles stabbed by no solution line, in input order.

    Raises UnknownLineError if the solution uses lines outside the
    instance's candidate sets instead of silently dropping them.
    """
    foreign = [Line(Axis.HORIZONTAL, y) for y in sorted(sol.hlines - set(inst.hlines))]
    foreign += [Line(Axis.VERTICAL, x) for x in sorted(sol.vlines - set(inst.vlines))]
    if foreign:
        raise UnknownLineError(foreign)
    hs = sorted(sol.hlines)
    vs = sorted(sol.vlines)
    return [r for r in inst.rects if not rect_stabbed_by(r, hs, vs)]


def transpose(inst: Instance) -> Instance:
    """Swap x and y everywhere; an involution mapping solutions likewise."""
    return Instance(
        rects=[r.transpose() for r in inst.rects],
        hlines=inst.vlines,
        vlines=inst.hlines,
    )


def strips_of(axis: Axis, positions: Sequence[int]) -> list[Strip]:
    """The n+1 open strips cut out of the plane by n sorted line positions."""
    for a, b in zip(positions, positions[1:]):
        if a >= b:
            raise ValueError("line positions must be strictly increasing")
    bounds: list[Optional[int]] = [None, *positions, None]
    return [Strip(axis, bounds[i], bounds[i + 1]) for i in range(len(positions) + 1)]


def strip_contains(strip: Strip, line: Line) -> bool:
    """True iff the line lies strictly inside the open strip."""
    if line.axis is not strip.axis:
        raise ValueError("line axis does not match strip axis")
    return strip.contains_pos(line.pos)


def rect_meets_strip(strip: Strip, rect: Rect) -> bool:
    """True iff the rectangle's extent intersects the strip's open interior."""
    a, b = rect.interval(strip.axis)
    return strip.meets_interval(a, b)


def separated(strips: Sequence[Strip], line_positions: Iterable[int]) -> bool:
    """Separation predicate for a family of disjoint parallel strips.

    True iff every pair of strips has a line between them (weakly touching
    both boundaries counts: the strips lie on opposite sides) and no line
    meets any strip's interior.
    """
    pool = sorted(set(line_positions))
    for s in strips:
        for p in pool:
            if s.contains_pos(p):
                return False

    def key(s: Strip) -> tuple[int, int]:
        return (0, s.lo) if s.lo is not None else (-1, 0)

    ordered = sorted(strips, key=key)
    for left, right in zip(ordered, ordered[1:]):
        if left.hi is None or right.lo is None:
            return False  # overlapping unbounded strips cannot be separated
        if not any(left.hi <= p <= right.lo for p in pool):
            return False
    return True
