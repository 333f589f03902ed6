"""Intuitionistic fuzzy sets: composition, lattice operations and ideal checks.

Grades are exact fractions throughout; a failed check names the product
and the two grades it compared.
"""

from gammaag import (
    IfsKind,
    characterize_by_composition,
    compose,
    delta,
    intersect,
    is_if,
    largest_ideal_below,
    load_fixture,
    random_ifs,
)

F2 = load_fixture("F2")
D = delta(5)

A = random_ifs(5, 6, seed=1)
print("A         ", A)
print("δ∘A       ", compose(F2, D, A))
print("A∘δ       ", compose(F2, A, D))

for kind in IfsKind:
    v = is_if(F2, A, kind)
    line = f"{kind.value:15s} {v.holds}"
    if not v.holds:
        w = v.witness
        line += f"   {w.component}({w.at + 1}) = {w.value}, bound {w.bound}"
    print(line)

# the same verdicts through products with δ
for kind in (IfsKind.IF_SUBGROUPOID, IfsKind.IF_LEFT, IfsKind.IF_RIGHT):
    assert characterize_by_composition(F2, A, kind).holds == is_if(F2, A, kind).holds

# the largest two-sided ideal inside A
P = largest_ideal_below(F2, A, "two-sided")
print("\nP         ", P)
print("P is two-sided:", is_if(F2, P, IfsKind.IF_TWO_SIDED).holds)
print("P∘P == P:", compose(F2, P, P) == P)
Q = largest_ideal_below(F2, random_ifs(5, 6, seed=2), "two-sided")
print("P∘Q == P∩Q:", compose(F2, P, Q) == intersect(P, Q))
