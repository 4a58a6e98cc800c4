"""
Three generic flags
===================

For transverse flags, pairing layer i with layer d+1-i on each face of the
prism does the job with ceil(3d/2) vectors, and no cover does better.
"""

from flagcover import QQ, build_G, mu_exact, transverse_synth, transverse_tuple

for d in range(2, 6):
    t, attempts = transverse_tuple(3, d, QQ, seed=d)
    gs = transverse_synth(t)
    print(f"d={d}  transverse after {attempts} draw(s)  construction={len(gs)}  exact={mu_exact(t).mu}")

# the prism graph of a generic triple in Q^3: a triangle and a 6-cycle
t, _ = transverse_tuple(3, 3, QQ, seed=7)
g = build_G(t)
for c in g.cycles:
    print(len(c), c)
