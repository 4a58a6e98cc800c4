"""
Where the dimension goes
========================

Walking from (0,0,0) to (d,d,d) one layer at a time, the triple intersection
grows by d in total. The cost report shows which cycles pay for each step.
"""

import random

from flagcover import QQ, build_G, certify, cost_one_independent, dim_grid, hop_costs, random_lattice_path, random_tuple

t = random_tuple(3, 5, QQ, seed=4, coeff_bound=1)
rep = certify(t)

print(rep.inequality_line())
for unit in rep.unit_costs:
    print(unit["group"], unit["kind"], "length", unit["length"], "cost", unit["cost"], "limit", unit["limit"])

# any walk charges d vertices in total, never both ends of a G edge
g, grid = build_G(t), dim_grid(t)
rng = random.Random(0)
for _ in range(3):
    costs = hop_costs(random_lattice_path(t.d, rng), grid)
    charged = sorted(str(r) for r, c in costs.items() if c)
    print(charged, cost_one_independent(g, costs))
