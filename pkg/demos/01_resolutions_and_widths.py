"""Minimal resolutions, projective dimension and homological width.

Run:  python3 demos/01_resolutions_and_widths.py

Walks through a radical-square-zero path algebra A3-rad2, where the simple
at the source vertex has projective dimension 2, then shows that the width
of its projective resolution recovers that number and that gluing on a
contractible complex leaves the width alone.
"""

from findim import exactla as la
from findim.algebra import preset
from findim.complexes import (
    ChainMap,
    cone,
    direct_sum,
    homological_width,
    is_contractible,
    projective_normalize,
    resolution_complex,
)
from findim.modules import minimal_resolution, projective_dimension, simple_module

a = preset("A3-rad2")
print(f"algebra {a.name}: dim {a.dim}, {a.num_vertices} vertices, Cartan matrix")
print(la.to_strings(a.cartan))

for v in range(a.num_vertices):
    s = simple_module(a, v)
    res = minimal_resolution(s, depth=6)
    terms = " <- ".join("+".join(f"P{w + 1}" for w in verts) for verts in res.vertices)
    print(f"S{v + 1}: pd {projective_dimension(s)}, resolution {terms}")

s1 = simple_module(a, 0)
p = projective_normalize(s1).complex
print(f"\nwidth of the normalized resolution of S1: {homological_width(p)}")

junk = cone(ChainMap.identity(resolution_complex(simple_module(a, 1))))
print(f"cone(id) is contractible: {is_contractible(junk)}")
print(f"width after adding it as a summand: {homological_width(direct_sum(p, junk))}")
