"""Verifying theorems on instances and hunting for counterexamples.

``verify`` reports each hypothesis separately and only checks the
conclusion when they all hold.  ``hunt`` draws seeded random inputs; with
``relax_hypotheses`` it ignores the role hypotheses on the inputs, which
shows that they are really needed.
"""

from gammaag import HuntConfig, InstanceBundle, TheoremId, hunt, largest_ideal_below, load_fixture, random_ifs, verify

F2 = load_fixture("F2")

A = largest_ideal_below(F2, random_ifs(5, 4, seed=3), "left")
v = verify(TheoremId.GRAND_EQ, InstanceBundle(F2, (A,)))
print("grand equivalence on a left ideal:", v.conclusion_holds)
for name, value in v.observed.items():
    print(f"  {name:16s} {value}")

print()
for relax in (False, True):
    r = hunt(TheoremId.ABSORB, HuntConfig(denominator=1, budget=2000, seed=0, relax_hypotheses=relax,
                                          groupoids=(F2,)))
    print(f"absorption hunt, relaxed={relax}: {r.tried} samples, counterexample: {r.found}")
    if r.found:
        print("   ", r.counterexample.ifs[0], "->", r.verdict.witness.part, "fails")

# a hunt over every small qualifying groupoid instead of one fixture
r = hunt(TheoremId.QUASI_TS, HuntConfig(sizes=(2, 3), denominator=4, budget=1000, seed=1))
print(f"\nquasi vs two-sided on {r.groupoid_count} groupoids: counterexample = {r.found}")
