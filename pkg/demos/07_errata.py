"""Published examples that do not check out.

Two printed grade pairs break mu + nu <= 1, so they only load as
unchecked sets.  One of them is claimed to be a left ideal, which fails,
and the product/intersection example on F3 does not give equal sets.
"""

from gammaag import IfsKind, compose, intersect, is_if, load_fixture

F2, F3 = load_fixture("F2"), load_fixture("F3")

for name in ("A-ex", "A-cut"):
    A = load_fixture(name)
    bad = [x + 1 for x in range(5) if A.mu[x] + A.nu[x] > 1]
    print(f"{name}: valid IFS = {A.is_valid()}, mu + nu > 1 at {bad}")

v = is_if(F2, load_fixture("A-ex"), IfsKind.IF_LEFT)
w = v.witness
print(f"\nA-ex left ideal: {v.holds}; {w.elements[0] + 1} α {w.elements[1] + 1} = {w.at + 1}, "
      f"nu = {w.value} > {w.bound}")

A, B = load_fixture("A-fgh"), load_fixture("B-fgh")
print("\nA∘B   ", compose(F3, A, B))
print("A ∩ B ", intersect(A, B))
print("A two-sided:", is_if(F3, A, IfsKind.IF_TWO_SIDED).holds, " B two-sided:", is_if(F3, B, IfsKind.IF_TWO_SIDED).holds)
