#!/usr/bin/env python3
# Separate colored points with the fewest axis-parallel cuts by converting
# the task into a stabbing instance on doubled coordinates.

from rectstab import ColoredPointSet, SearchBudget, discretization_to_stabbing, opt_exact

# two interleaved color classes on a small grid
points = ColoredPointSet([
    (0, 0, 0), (1, 2, 1), (2, 0, 0), (3, 2, 1), (4, 1, 0), (1, 4, 1), (3, 4, 0),
])
inst = discretization_to_stabbing(points)
print(f"{len(points.points)} points -> {len(inst.rects)} pair rectangles, "
      f"{len(inst.hlines)} horizontal and {len(inst.vlines)} vertical cut candidates")

sol = opt_exact(inst, SearchBudget(max_size=10))
print(f"minimum cut count: {len(sol)}")

# candidate positions are odd integers in doubled space; cut t separates the
# original plane at t/2
for y in sorted(sol.hlines):
    print(f"  horizontal cut at y = {y}/2")
for x in sorted(sol.vlines):
    print(f"  vertical cut at x = {x}/2")
