"""Intra-regularity: every a equals (x α (a β a)) γ y for some x, y.

F2 is intra-regular; F3 is not, and the report says which elements have
no such expression.
"""

from gammaag import intra_regular_witnesses, intra_regularity, load_fixture

for name in ("F2", "F3"):
    G = load_fixture(name)
    r = intra_regularity(G)
    print(f"{name}: intra-regular = {r.regular}")
    for a, w in sorted(r.witnesses.items()):
        print(f"  {a + 1} = ({w.x + 1} {G.gamma_labels[w.alpha]} ({a + 1} {G.gamma_labels[w.beta]} {a + 1})) "
              f"{G.gamma_labels[w.gamma]} {w.y + 1}   -> {w.evaluate(G) + 1}")
    if r.failures:
        print("  no expression for", [a + 1 for a in r.failures])

F2 = load_fixture("F2")
print("\nall expressions for 3 in F2:", [(w.x + 1, w.y + 1) for w in intra_regular_witnesses(F2, 2)])
