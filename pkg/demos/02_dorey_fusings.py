"""Fusing triples of E6 and the PRV condition.

Every fusing triple also satisfies PRV, but not conversely: D5 has a
PRV-admissible (2,2,2) without a fusing.
"""
from doreyrule.cli import fusing_table
from doreyrule.dorey import enumerate_fusings, fusing_triples, prv_admissible
from doreyrule.root_system import build_root_system

e6 = build_root_system("E", 6)
sols = enumerate_fusings(e6)
print(fusing_table(e6, sols, unordered=True))

example = next(s for s in sols if s.nodes == (6, 1, 2) and s.rapidity_exponents == (0, -5, 10))
print("L, lbar, h fuse with rapidity exponents", dict(zip(("L", "lbar", "h"), example.rapidity_exponents)))

d5 = build_root_system("D", 5)
print("D5 (2,2,2) PRV:", prv_admissible(d5, 2, 2, 2), " fusing:", (2, 2, 2) in fusing_triples(d5))
