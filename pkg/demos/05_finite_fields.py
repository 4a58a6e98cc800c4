"""
Small fields
============

The same constructions run over F_p. Over F_2 compatibility is decided by
searching for a witness, since a union of a few subspaces can fill the space.
"""

from flagcover import GF, mu_exact_over_field, random_tuple, synth3

for p in (2, 3, 5):
    F = GF(p)
    sizes = []
    for seed in range(8):
        t = random_tuple(3, 3, F, seed)
        sizes.append((len(synth3(t)), mu_exact_over_field(t).mu))
    print(f"F_{p}: (construction, exact) over 8 triples in dimension 3 ->", sizes)
