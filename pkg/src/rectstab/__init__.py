"""Rectangle stabbing toolkit.

Pick the fewest axis-parallel lines from a candidate set so that every
axis-parallel rectangle is intersected. Ships a parameterized
7/4-approximation, an exact branch-and-bound oracle for small instances,
the gap-preserving hardness reduction from Multicolored Clique with both
direction maps, seeded generators, a verifier, and a CLI.
"""

from .approx import (
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
from .core import (
    Axis,
    Instance,
    Line,
    Rect,
    Solution,
    Strip,
    UnknownLineError,
    rect_meets_strip,
    separated,
    stabs,
    strip_contains,
    strips_of,
    transpose,
    verify,
)
from .exact import NodeLimitExceeded, SearchBudget, brute_force, opt_exact
from .generators import (
    ColoredPointSet,
    InseparablePoints,
    PlantedWitness,
    discretization_to_stabbing,
    gen_mcgraph,
    gen_planted,
    gen_uniform,
)
from .greedy1d import Infeasible, IntervalSet, stab_1d, stab_axis
from .reduction import (
    MCClique,
    MCGraph,
    MalformedReduction,
    NotApplicable,
    ReducedInstance,
    build,
    forward,
    make_nondegenerate,
    map_solution_back,
    reverse,
)
from .twosat import Formula
from .twosat import solve as solve_2sat

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "ColoredPointSet",
    "Formula",
    "GuessInfeasible",
    "Infeasible",
    "InseparablePoints",
    "Instance",
    "IntervalSet",
    "Line",
    "MCClique",
    "MCGraph",
    "MalformedReduction",
    "NodeLimitExceeded",
    "NotApplicable",
    "PlantedWitness",
    "Rect",
    "ReducedInstance",
    "SearchBudget",
    "SearchStats",
    "Solution",
    "Strip",
    "UnknownLineError",
    "assemble_2sat",
    "brute_force",
    "build",
    "discretization_to_stabbing",
    "eliminate_redundant",
    "enumerate_horizontal_guesses",
    "enumerate_vertical_guesses",
    "forward",
    "gen_mcgraph",
    "gen_planted",
    "gen_uniform",
    "make_nondegenerate",
    "map_solution_back",
    "opt_exact",
    "preselect",
    "rect_meets_strip",
    "reverse",
    "separated",
    "solve_2sat",
    "solve_min",
    "solve_with_budget",
    "stab_1d",
    "stab_axis",
    "stabs",
    "strip_contains",
    "strips_of",
    "transpose",
    "verify",
]
