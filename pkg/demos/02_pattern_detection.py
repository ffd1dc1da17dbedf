"""
Detecting noisy cliques, bicliques, and stars
=============================================

Pattern detection scans the ordered upper triangle for the largest blocks
that are still "pure enough": overall density at least tau, and every row
and column of the block at least sigma.  Lowering tau tolerates more
missing edges inside a block.
"""

import random

import numpy as np

from fabricmotifs import BinaryMatrix, PurityParams, detect

rng = random.Random(11)
n = 16
a = np.zeros((n, n), dtype=np.int64)

# plant a clique on rows 0..5 with one edge knocked out
for i in range(6):
    for j in range(i + 1, 6):
        a[i, j] = a[j, i] = 1
a[1, 4] = a[4, 1] = 0

# plant a biclique between rows 7..9 and columns 11..14, minus one cell
for i in range(7, 10):
    for j in range(11, 15):
        a[i, j] = a[j, i] = 1
a[8, 13] = a[13, 8] = 0

# sprinkle a little background noise
for i in range(n):
    for j in range(i + 1, n):
        if a[i, j] == 0 and rng.random() < 0.03:
            a[i, j] = a[j, i] = 1

m = BinaryMatrix.from_array(a)

for sigma, tau in [(1.0, 1.0), (0.5, 0.9), (0.3, 0.8)]:
    found = detect(m, PurityParams(sigma=sigma, tau=tau))
    print(f"sigma={sigma} tau={tau}:")
    for p in found:
        print(f"  {p.kind.value:8s} rows {p.rows} cols {p.cols} "
              f"present={p.present} missing={p.missing}")
    if not len(found):
        print("  (nothing pure enough)")
    print()

# at sigma = tau = 1 only perfectly filled blocks qualify, so the damaged
# clique shrinks to its intact core and the damaged biclique splits
