"""Enumerating small structures by backtracking.

Counts are checked here against a naive scan of every table.
"""

import itertools

import numpy as np

from gammaag import GammaGroupoid, LawId, enumerate_groupoids, holds, intra_regularity

for n in (2, 3):
    fast = sum(1 for _ in enumerate_groupoids(n, 1))
    naive = sum(
        holds(GammaGroupoid(np.array(flat).reshape(1, n, n)), LawId.LEFT_INVERTIVE)
        for flat in itertools.product(range(n), repeat=n * n)
    )
    print(f"n={n}: {fast} left invertive tables (naive scan: {naive})")

laws = (LawId.LEFT_INVERTIVE, LawId.AG_STAR_STAR)
good = [G for G in enumerate_groupoids(3, 1, laws) if intra_regularity(G).regular]
print(f"\nn=3 with AG** and intra-regular: {len(good)}")
for G in good[:3]:
    print(G.to_lists())
