"""Checking groupoid laws on a 9-element table.

F1 is left invertive and medial but neither commutative nor associative.
Every failed law comes with the lexicographically smallest instantiation
that breaks it; any other instantiation can be evaluated directly.
"""

from gammaag import LawId, check_law, derive_power_gamma, evaluate_law, load_fixture

F1 = load_fixture("F1")

for law in LawId:
    report = check_law(F1, law)
    if report.holds:
        print(f"{law.value:16s} holds")
    else:
        w = report.witness
        xs = [e + 1 for e in w.elements]
        print(f"{law.value:16s} fails at {xs}: {w.lhs + 1} != {w.rhs + 1}")

# a specific instance, in 1-based names: 2.3 against 3.2
lhs, rhs = evaluate_law(F1, LawId.COMMUTATIVE, (1, 2), (0,))
print(f"\n2.3 = {lhs + 1}, 3.2 = {rhs + 1}")

# two operations built from squares and cubes of the F1 product
G = derive_power_gamma(F1)
print("\nderived structure with", G.g, "operations:")
for law in (LawId.LEFT_INVERTIVE, LawId.MEDIAL, LawId.IDEMPOTENT_BAND, LawId.COMMUTATIVE):
    print(f"  {law.value:16s} {'holds' if check_law(G, law).holds else 'fails'}")
lhs, rhs = evaluate_law(G, LawId.COMMUTATIVE, (8, 0), (0,))
print(f"  9 α 1 = {lhs + 1}, 1 α 9 = {rhs + 1}")
