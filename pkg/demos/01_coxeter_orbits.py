"""Coxeter orbits of fundamental weights and their positions in the Coxeter plane.

Each orbit has h elements and sums to zero; projected to the plane they sit on
a regular h-gon, so the angle between consecutive elements is 2 pi / h.
"""
import math

from doreyrule.root_system import build_root_system, coxeter_orbit, fundamental_weight, plane_angle, weight_add

rs = build_root_system("D", 5)
print(f"{rs.name}: h = {rs.h}, black nodes {sorted(rs.black)}, white nodes {sorted(rs.white)}")

for i in rs.nodes:
    orbit = coxeter_orbit(rs, i)
    lam = fundamental_weight(rs, i)
    units = [round(plane_angle(rs, lam, mu) * rs.h / math.pi) for mu in orbit]
    print(f"lambda_{i}: angles (pi/h) {units}  orbit sum {weight_add(*orbit)}")

print("bar involution:", rs.bar)
