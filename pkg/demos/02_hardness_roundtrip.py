#!/usr/bin/env python3
# Multicolored Clique -> Rectangle Stabbing and back: build the hardness
# instance, stab it optimally, and read the clique off the solution lines.

from rectstab import SearchBudget, build, forward, gen_mcgraph, opt_exact, reverse, verify

K, R = 2, 3
graph, planted = gen_mcgraph(k=K, r=R, extra_edge_prob_num=1, extra_edge_prob_den=3,
                             seed=7, plant=True)
print(f"graph: {K} parts x {R} vertices, {len(graph.edges)} edges")
print(f"planted clique: {dict(sorted(planted.chosen.items()))}")

red = build(graph)
print(f"\nreduced instance: {len(red.inst.rects)} rectangles, "
      f"{len(red.inst.hlines) + len(red.inst.vlines)} candidate lines (= 4kr)")
print(f"strip table (per axis): {list(red.vstrips)}")

# the clique maps to exactly 4k lines, one per strip
sol = forward(red, planted)
assert verify(red.inst, sol) == []
print(f"\nforward(clique): {len(sol)} lines, stabs everything")

# the instance cannot be stabbed any cheaper, and any optimal stabbing
# decodes back to a multicolored clique
best = opt_exact(red.inst, SearchBudget(max_size=4 * K))
print(f"exact optimum: {len(best)} lines (= 4k, so the bound is tight)")
extracted = reverse(red, best, eps_num=1, eps_den=1)
print(f"reverse(optimal stabbing): clique {dict(sorted(extracted.chosen.items()))}")
assert len(extracted) == K
