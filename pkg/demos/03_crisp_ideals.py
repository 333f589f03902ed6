"""Crisp ideals, subset products and level cuts on F2."""

from fractions import Fraction

from gammaag import CrispKind, CrispSubset, is_crisp, is_duo, level_cut, load_fixture, subset_product

F2 = load_fixture("F2")

S = CrispSubset.of(5, [0, 1])  # {1, 2}
for kind in CrispKind:
    v = is_crisp(F2, S, kind)
    print(f"{{1, 2}} {kind.value:15s} {v.holds}")

T = CrispSubset.of(5, [2])  # {3}
v = is_crisp(F2, T, CrispKind.LEFT_IDEAL)
w = v.witness
print(f"\n{{3}} left ideal: {v.holds}; {w.elements[0] + 1} α {w.elements[1] + 1} = {w.product + 1} escapes")
print("{3} Γ {3} =", subset_product(F2, T, T))

A = load_fixture("A-cut")
for alpha in ("1/10", "2/5", "4/5"):
    print(f"cut at {alpha}:", level_cut(A, Fraction(alpha)))

print("\nleft duo:", is_duo(F2, "left").holds, " right duo:", is_duo(F2, "right").holds)
