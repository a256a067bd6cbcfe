#!/usr/bin/env python
"""Walk the p = 31, l = 4 example end to end and print every intermediate."""

from januarials.construct import solve_generators, verify_pair
from januarials.diagram import build_diagram, genus_breakdown, is_januarial
from januarials.fieldcore import PrimeModulus
from januarials.gk import gk_coefficients, januarial_thetas, roots_of_gk
from januarials.pgl2 import format_cycles

p, l = 31, 4
k = PrimeModulus(p).k
print(f"p={p}  k={k}")
print(f"g_{k} = {gk_coefficients(k).display()}")
print(f"roots of g_{k}: {list(roots_of_gk(k, p))}")
for sub in (8, 4, 2):
    print(f"  roots of g_{sub}: {list(roots_of_gk(sub, p))}")
thetas = januarial_thetas(p)
print(f"januarial thetas: {list(thetas)}")

for theta in thetas:
    pair = solve_generators(p, l, theta)
    d = build_diagram(pair)
    g = genus_breakdown(d)
    print()
    print(f"theta={theta}: X={pair.params.x_rows()} Y={pair.params.y_rows()}")
    print(f"  x  = {format_cycles(pair.xperm, p)}")
    print(f"  y  = {format_cycles(pair.yperm, p)}")
    print(f"  xy = {format_cycles(pair.xyperm, p)}")
    print(f"  januarial={is_januarial(d)} genus={g.genus} (v,e,f)={(g.v, g.e, g.f)}"
          f" checks={'ok' if verify_pair(pair).ok else 'FAILED'}")
