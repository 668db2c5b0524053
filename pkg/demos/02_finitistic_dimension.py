"""Finitistic dimension of the bundled algebras and how each value was obtained.

Run:  python3 demos/02_finitistic_dimension.py

Each row gives the bracket [lo, hi] and the rule that produced it: an exact
list of indecomposables for Nakayama algebras, a formula (local,
finite global dimension, self-injective, Gorenstein), or a seeded search
lower bound.
"""

from findim.algebra import PRESETS, Bimodule, preset, triangular_matrix_algebra
from findim.homdim import finitistic_dimension, global_dimension

print(f"{'algebra':18s} {'gldim':>6s} {'findim':>8s}  method")
for name in PRESETS:
    a = preset(name)
    rep = finitistic_dimension(a)
    print(f"{name:18s} {str(global_dimension(a)):>6s} {str(rep.value):>8s}  {rep.method}: {', '.join(rep.witnesses)}")

# an algebra that needs the Gorenstein rule: upper triangular 2x2 matrices over the dual numbers
d = preset("dual")
t = triangular_matrix_algebra(d, d, Bimodule.regular(d))
rep = finitistic_dimension(t)
print(f"\nT2(dual): gldim {global_dimension(t)}, findim {rep.value} ({rep.witnesses[0]})")
