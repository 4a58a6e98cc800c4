"""
Beating the generic count
=========================

Stacking two generic blocks of dimension 3 gives a triple in Q^6 that needs
10 vectors, one more than a generic triple in Q^6.
"""

from flagcover import QQ, build_G, classify, direct_sum, mu_exact, synth3, transverse_synth, transverse_tuple

block, _ = transverse_tuple(3, 3, QQ, seed=7)
t = direct_sum(block, block)
g = build_G(t)
cls = classify(g, t)

print("cycle lengths", sorted(len(c) for c in g.cycles))
print("|A|, |B|, |C| =", cls.sizes())
print("counting bound", cls.set_bound())

gs = synth3(t)
print("construction", len(gs), " exact", mu_exact(t).mu)

# a generic triple in the same dimension
generic, _ = transverse_tuple(3, 6, QQ, seed=6)
print("generic Q^6 triple", len(transverse_synth(generic)))
