"""Reproducible instance and graph generators.

Planted instances carry a known stabbing set so solver guarantees that are
stated relative to an unknown optimal solution become testable; the colored
point-set path converts axis-parallel class-separation problems into
stabbing instances on doubled coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Axis, Instance, Line, Rect, Solution, verify
from .reduction import MCClique, MCGraph
from .rng import Xoshiro256StarStar


@dataclass(frozen=True)
class PlantedWitness:
    """Generator-known stabbing set; hstar/vstar positions together stab
    the emitted instance."""

    hstar: frozenset[int]
    vstar: frozenset[int]

    def __init__(self, hstar, vstar):
        object.__setattr__(self, "hstar", frozenset(hstar))
        object.__setattr__(self, "vstar", frozenset(vstar))

    def as_solution(self) -> Solution:
        return Solution(hlines=self.hstar, vlines=self.vstar)

    def __len__(self) -> int:
        return len(self.hstar) + len(self.vstar)


@dataclass(frozen=True)
class ColoredPointSet:
    points: tuple[tuple[int, int, int], ...]  # (x, y, color)

    def __init__(self, points):
        object.__setattr__(self, "points", tuple((int(x), int(y), int(c)) for x, y, c in points))


class InseparablePoints(ValueError):
    """Two points at the same position carry different colors."""


def gen_planted(k: int, n: int, coord_range: int, seed: int) -> tuple[Instance, PlantedWitness]:
    """Instance with a planted stabbing set of exactly k lines.

    Samples k distinct witness lines over a random axis split, then n
    rectangles each forced to contain at least one witness line, plus 2k
    distractor candidate lines. Deterministic in (k, n, coord_range, seed).
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if coord_range < k:
        raise ValueError("coord_range too small to hold k distinct positions per axis")
    rng = Xoshiro256StarStar(seed)
    c = coord_range
    k_h = rng.randint(0, k)
    k_v = k - k_h
    hstar = rng.sample_distinct(-c, c, k_h)
    vstar = rng.sample_distinct(-c, c, k_v)
    witness_lines = [Line(Axis.HORIZONTAL, y) for y in hstar] + [
        Line(Axis.VERTICAL, x) for x in vstar
    ]

    ext = max(1, c // 4)
    rects = []
    for _ in range(n):
        ln = rng.choice(witness_lines)
        if ln.axis is Axis.HORIZONTAL:
            y1 = max(-c, ln.pos - rng.randint(0, ext))
            y2 = min(c, ln.pos + rng.randint(0, ext))
            x1 = rng.randint(-c, c)
            x2 = min(c, x1 + rng.randint(0, 2 * ext))
        else:
            x1 = max(-c, ln.pos - rng.randint(0, ext))
            x2 = min(c, ln.pos + rng.randint(0, ext))
            y1 = rng.randint(-c, c)
            y2 = min(c, y1 + rng.randint(0, 2 * ext))
        rects.append(Rect(x1, x2, y1, y2))

    hlines = list(hstar)
    vlines = list(vstar)
    for _ in range(2 * k):
        if rng.chance(1, 2):
            hlines.append(rng.randint(-c, c))
        else:
            vlines.append(rng.randint(-c, c))

    inst = Instance(rects=rects, hlines=hlines, vlines=vlines)
    witness = PlantedWitness(hstar=hstar, vstar=vstar)
    assert verify(inst, witness.as_solution()) == [], "planted witness must stab everything"
    return inst, witness


def gen_uniform(n: int, m_lines: int, coord_range: int, seed: int) -> Instance:
    """Uniform random rectangles and candidate lines; possibly infeasible."""
    rng = Xoshiro256StarStar(seed)
    c = coord_range
    rects = []
    for _ in range(n):
        x1 = rng.randint(-c, c)
        x2 = rng.randint(x1, c)
        y1 = rng.randint(-c, c)
        y2 = rng.randint(y1, c)
        rects.append(Rect(x1, x2, y1, y2))
    hlines = []
    vlines = []
    for _ in range(m_lines):
        (hlines if rng.chance(1, 2) else vlines).append(rng.randint(-c, c))
    return Instance(rects=rects, hlines=hlines, vlines=vlines)


def gen_mcgraph(
    k: int,
    r: int,
    extra_edge_prob_num: int,
    extra_edge_prob_den: int,
    seed: int,
    plant: bool,
) -> tuple[MCGraph, Optional[MCClique]]:
    """k-partite graph with parts of size r; optionally plants a clique.

    With plant=True one vertex per part is selected, all its pairwise edges
    inserted, and every remaining cross-part pair added independently with
    probability extra_edge_prob_num/extra_edge_prob_den.
    """
    if k < 1 or r < 1:
        raise ValueError("need k >= 1 and r >= 1")
    rng = Xoshiro256StarStar(seed)
    edges: set[tuple[int, int]] = set()
    clique: Optional[MCClique] = None
    chosen_ids: list[int] = []
    if plant:
        chosen = {i: rng.randint(1, r) for i in range(1, k + 1)}
        clique = MCClique(chosen=chosen)
        chosen_ids = [(i - 1) * r + (p - 1) for i, p in chosen.items()]
        for a in range(len(chosen_ids)):
            for b in range(a + 1, len(chosen_ids)):
                u, v = sorted((chosen_ids[a], chosen_ids[b]))
                edges.add((u, v))
    for u in range(k * r):
        for v in range(u + 1, k * r):
            if u // r == v // r:
                continue
            if (u, v) in edges:
                continue
            if rng.chance(extra_edge_prob_num, extra_edge_prob_den):
                edges.add((u, v))
    return MCGraph(k=k, r=r, edges=frozenset(edges)), clique


def discretization_to_stabbing(pts: ColoredPointSet) -> Instance:
    """Stabbing instance whose solutions are exactly the axis-parallel cut
    sets separating every bichromatic point pair.

    Coordinates are doubled; a bichromatic pair with distinct x becomes the
    x-range [2*min+1, 2*max-1] (odd cut positions strictly between them)
    and an equal coordinate becomes a zero-width even range no odd line can
    stab, forcing separation on the other axis. Candidate lines are all odd
    integers inside the doubled bounding box.
    """
    by_pos: dict[tuple[int, int], int] = {}
    for x, y, color in pts.points:
        prev = by_pos.get((x, y))
        if prev is not None and prev != color:
            raise InseparablePoints(f"points at ({x}, {y}) carry colors {prev} and {color}")
        by_pos[(x, y)] = color

    rects = []
    points = pts.points
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            px, py, pc = points[i]
            qx, qy, qc = points[j]
            if pc == qc:
                continue
            if px != qx:
                xr = (2 * min(px, qx) + 1, 2 * max(px, qx) - 1)
            else:
                xr = (2 * px, 2 * px)
            if py != qy:
                yr = (2 * min(py, qy) + 1, 2 * max(py, qy) - 1)
            else:
                yr = (2 * py, 2 * py)
            rects.append(Rect(xr[0], xr[1], yr[0], yr[1]))

    if points:
        xs = [x for x, _, _ in points]
        ys = [y for _, y, _ in points]
        vlines = list(range(2 * min(xs) + 1, 2 * max(xs), 2))
        hlines = list(range(2 * min(ys) + 1, 2 * max(ys), 2))
    else:
        vlines = []
        hlines = []
    return Instance(rects=rects, hlines=hlines, vlines=vlines)
