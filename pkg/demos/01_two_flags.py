"""
Two flags share a basis
=======================

Any two complete flags in K^d admit one basis that is adapted to both.
The pairing of layers is a permutation read off the intersection table.
"""

from flagcover import QQ, bruhat_perm, pair_dims, random_tuple, two_flag_generators

# two random flags in Q^5 with small entries, so the table is interesting
u, v = random_tuple(2, 5, QQ, seed=3, coeff_bound=1).flags

# dim(U_i ∩ V_j) for 0 <= i, j <= 5
print(pair_dims(u, v))

# the permutation: first j where row i of the table jumps
sigma = bruhat_perm(u, v)
print("sigma =", sigma.as_list())

# one vector per layer of U, each landing in V at level sigma(i)
gs = two_flag_generators(u, v)
for s, vec in zip(gs.sets, gs.vectors):
    print([str(r) for r in s.layers], [QQ.format(x) for x in vec])

print("size", len(gs), "for d =", u.d)
