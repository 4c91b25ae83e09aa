"""q-characters of fundamental modules and their lowering graphs."""
from doreyrule.cli import qcharacter_table, qcharacter_to_dot
from doreyrule.qchar import fm_qcharacter, specialize
from doreyrule.root_system import build_root_system

d4 = build_root_system("D", 4)
qc = fm_qcharacter(d4, 1)
print(qcharacter_table(qc))
print(qcharacter_to_dot(qc))

# the adjoint-like node has a monomial of multiplicity 2
mid = fm_qcharacter(d4, 2)
print(f"V_2: {len(mid)} distinct monomials, dimension {mid.dimension}")
print("zero weight multiplicity:", specialize(mid)[(0, 0, 0, 0)])

e6 = build_root_system("E", 6)
for i in e6.nodes:
    print(f"E6 V_{i}: dimension {fm_qcharacter(e6, i).dimension}")
