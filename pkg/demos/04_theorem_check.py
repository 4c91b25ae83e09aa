"""Fusings versus quadratic monomials, algebra by algebra.

A quadratic monomial Y[j,r] Y[k,s]^-1 in the character of V_i gives three
rapidities (bar j at r-h, i at 0, k at s); the fusing rule gives another
list.  The two lists agree on every algebra checked here.
"""
import time

from doreyrule.correspondence import fusing_to_monomial, verify_theorem
from doreyrule.dorey import enumerate_fusings
from doreyrule.root_system import build_root_system

for family, rank in [("A", 1), ("A", 3), ("A", 5), ("D", 4), ("D", 5), ("D", 6), ("E", 6)]:
    rs = build_root_system(family, rank)
    t0 = time.perf_counter()
    report = verify_theorem(rs)
    verdict = "MATCH" if report.matched else "MISMATCH"
    print(f"{rs.name:3s} {report.fusing_count:4d} fusings  {report.quadratic_count:4d} quadratic monomials  {verdict}  ({time.perf_counter() - t0:.2f}s)")

# one fusing, followed through the strip
rs = build_root_system("D", 5)
sol = enumerate_fusings(rs)[0]
quad, g, can = fusing_to_monomial(rs, sol, {})
print(f"{sol.nodes} powers {sol.exponents}: monomial {quad} in V_{can.i1}, g supported on {sorted(g.support())}")
