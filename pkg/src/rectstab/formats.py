"""Canonical JSON and CSV formats.

Instance JSON: {"rects": [[x1,x2,y1,y2], ...], "hlines": [...], "vlines": [...]}
Solution JSON: {"hlines": [...], "vlines": [...]}
Graph JSON:    {"k": K, "r": R, "edges": [[u,v], ...]} with vertex ids
               (i-1)*r + (p-1) for vertex p of part i.
Clique JSON:   {"size": S, "members": [[part, index], ...]}
Strip table:   {"k": K, "r": R, "vstrips": [[lo,hi], ...], "hstrips": [...]}
Points CSV:    header "x,y,color", one integer row per point.

All arrays are sorted and integers written in decimal, so emission is
byte-deterministic and files are diffable across runs.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Union

from .core import Instance, Rect, Solution
from .generators import ColoredPointSet
from .reduction import MCClique, MCGraph, ReducedInstance

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Input file does not match the expected schema."""


def _dump_json(obj, path: PathLike) -> None:
    Path(path).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load_json(path: PathLike):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from exc


def _int_list(obj, what: str) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(v, int) for v in obj):
        raise FormatError(f"{what} must be a list of integers")
    return obj


def dump_instance(inst: Instance, path: PathLike) -> None:
    _dump_json(
        {
            "rects": sorted([r.x1, r.x2, r.y1, r.y2] for r in inst.rects),
            "hlines": list(inst.hlines),
            "vlines": list(inst.vlines),
        },
        path,
    )


def load_instance(path: PathLike) -> Instance:
    obj = _load_json(path)
    if not isinstance(obj, dict) or set(obj) != {"rects", "hlines", "vlines"}:
        raise FormatError(f"{path}: expected keys rects/hlines/vlines")
    rects = []
    for row in obj["rects"]:
        if not isinstance(row, list) or len(row) != 4:
            raise FormatError(f"{path}: each rect must be [x1, x2, y1, y2]")
        try:
            rects.append(Rect(*_int_list(row, "rect")))
        except ValueError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return Instance(
        rects=rects,
        hlines=_int_list(obj["hlines"], "hlines"),
        vlines=_int_list(obj["vlines"], "vlines"),
    )


def dump_solution(sol: Solution, path: PathLike) -> None:
    _dump_json({"hlines": sorted(sol.hlines), "vlines": sorted(sol.vlines)}, path)


def load_solution(path: PathLike) -> Solution:
    obj = _load_json(path)
    if not isinstance(obj, dict) or set(obj) != {"hlines", "vlines"}:
        raise FormatError(f"{path}: expected keys hlines/vlines")
    return Solution(
        hlines=_int_list(obj["hlines"], "hlines"), vlines=_int_list(obj["vlines"], "vlines")
    )


def dump_graph(g: MCGraph, path: PathLike) -> None:
    _dump_json({"k": g.k, "r": g.r, "edges": sorted([u, v] for u, v in g.edges)}, path)


def load_graph(path: PathLike) -> MCGraph:
    obj = _load_json(path)
    if not isinstance(obj, dict) or set(obj) != {"k", "r", "edges"}:
        raise FormatError(f"{path}: expected keys k/r/edges")
    if not isinstance(obj["k"], int) or not isinstance(obj["r"], int):
        raise FormatError(f"{path}: k and r must be integers")
    edges = set()
    for row in obj["edges"]:
        if not isinstance(row, list) or len(row) != 2:
            raise FormatError(f"{path}: each edge must be [u, v]")
        u, v = _int_list(row, "edge")
        edges.add((min(u, v), max(u, v)))
    try:
        return MCGraph(k=obj["k"], r=obj["r"], edges=frozenset(edges))
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def dump_strip_table(red: ReducedInstance, path: PathLike, doubled: bool = False) -> None:
    _dump_json(
        {
            "k": red.k,
            "r": red.r,
            "doubled": doubled,
            "vstrips": [list(t) for t in red.vstrips],
            "hstrips": [list(t) for t in red.hstrips],
        },
        path,
    )


def load_reduced(instance_path: PathLike, strips_path: PathLike) -> tuple[ReducedInstance, bool]:
    """The reduced instance plus whether the instance file holds the doubled
    (nondegenerate) coordinates. Strip ranges are always in original
    coordinates; a doubled instance is halved back before use."""
    inst = load_instance(instance_path)
    obj = _load_json(strips_path)
    if not isinstance(obj, dict) or set(obj) != {"k", "r", "doubled", "vstrips", "hstrips"}:
        raise FormatError(f"{strips_path}: expected keys k/r/doubled/vstrips/hstrips")
    k, r = obj["k"], obj["r"]
    doubled = obj["doubled"]
    if not isinstance(k, int) or not isinstance(r, int) or not isinstance(doubled, bool):
        raise FormatError(f"{strips_path}: bad k/r/doubled types")
    vstrips = tuple((row[0], row[1]) for row in obj["vstrips"])
    hstrips = tuple((row[0], row[1]) for row in obj["hstrips"])
    if len(vstrips) != 2 * k or len(hstrips) != 2 * k:
        raise FormatError(f"{strips_path}: expected 2k strips per axis")
    if doubled:
        try:
            rects = [
                Rect(rc.x1 // 2, (rc.x2 - 1) // 2, rc.y1 // 2, (rc.y2 - 1) // 2)
                for rc in inst.rects
            ]
        except ValueError as exc:
            raise FormatError(f"{instance_path}: not a doubled instance: {exc}") from exc
        inst = Instance(
            rects=rects,
            hlines=sorted({y // 2 for y in inst.hlines}),
            vlines=sorted({x // 2 for x in inst.vlines}),
        )
    return ReducedInstance(inst=inst, k=k, r=r, vstrips=vstrips, hstrips=hstrips), doubled


def dump_clique(clique: MCClique, path: PathLike) -> None:
    _dump_json(clique_json(clique), path)


def clique_json(clique: MCClique) -> dict:
    return {
        "size": len(clique),
        "members": [[i, p] for i, p in sorted(clique.chosen.items())],
    }


def load_points_csv(path: PathLike) -> ColoredPointSet:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["x", "y", "color"]:
            raise FormatError(f"{path}: expected header 'x,y,color'")
        points = []
        for row in reader:
            if not row:
                continue
            if len(row) != 3:
                raise FormatError(f"{path}: row {row!r} does not have 3 fields")
            try:
                points.append((int(row[0]), int(row[1]), int(row[2])))
            except ValueError as exc:
                raise FormatError(f"{path}: non-integer field in {row!r}") from exc
    return ColoredPointSet(points)


def dump_points_csv(pts: ColoredPointSet, path: PathLike) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "color"])
        for x, y, c in pts.points:
            writer.writerow([x, y, c])
