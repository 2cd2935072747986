#!/usr/bin/env python3
# Generate a planted instance, solve it three ways, and check the answers.

from rectstab import (
    SearchBudget,
    SearchStats,
    gen_planted,
    opt_exact,
    solve_min,
    solve_with_budget,
    verify,
)

K = 3
inst, witness = gen_planted(k=K, n=20, coord_range=30, seed=42)
print(f"instance: {len(inst.rects)} rectangles, "
      f"{len(inst.hlines)} horizontal / {len(inst.vlines)} vertical candidates")
print(f"planted witness uses {len(witness)} lines -> optimum is at most {K}")

# exact optimum (small instance, so the branch and bound is instant)
exact_sol = opt_exact(inst, SearchBudget(max_size=K))
print(f"\nexact optimum: {len(exact_sol)} lines "
      f"(h={sorted(exact_sol.hlines)}, v={sorted(exact_sol.vlines)})")

# budgeted approximation: guaranteed <= floor(7k/4) when a size-k solution exists
stats = SearchStats()
sol = solve_with_budget(inst, K, stats)
print(f"approx at k={K}: {len(sol)} lines <= floor(7*{K}/4) = {(7 * K) // 4}")
print(f"  search effort: {stats.splits} splits, {stats.vertical_guesses} vertical guesses, "
      f"{stats.horizontal_guesses} horizontal guesses, {stats.twosat_calls} 2-SAT calls")
assert verify(inst, sol) == []

# smallest budget that succeeds gives an upper-bound certificate for the optimum
k_min, sol_min = solve_min(inst, k_max=K)
print(f"solve_min: first success at budget {k_min} with {len(sol_min)} lines")
print(f"ratio vs optimum: {len(sol)}/{len(exact_sol)}")
