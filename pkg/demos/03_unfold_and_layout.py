"""
Unfolding a matrix into an edge sequence and motif glyphs
=========================================================

The fabric view assigns every vertex a horizontal line and every edge a
vertical wire.  Unfolding walks the upper triangle row by row: edges
covered by a detected pattern are grouped and later drawn as one glyph;
everything else becomes per-row staircases of single wires.
"""

import numpy as np

from fabricmotifs import (
    BinaryMatrix,
    Pattern,
    PatternKind,
    PatternSet,
    PatternGroup,
    PurityParams,
    detect,
    layout,
    unfold,
)

n = 8
a = np.zeros((n, n), dtype=np.int64)
for i in range(4):                      # K4 on vertices 0..3
    for j in range(i + 1, 4):
        a[i, j] = a[j, i] = 1
for i, j in [(2, 6), (4, 7), (5, 6)]:   # a few loose edges
    a[i, j] = a[j, i] = 1
m = BinaryMatrix.from_array(a)

patterns = detect(m, PurityParams(sigma=1.0, tau=1.0))
seq = unfold(m, patterns)

print("edge sequence groups:")
for g in seq.groups:
    kind = "pattern" if isinstance(g, PatternGroup) else "staircase"
    print(f"  {kind:9s} edges={list(g.edges)}")

lay = layout(seq, patterns)
print(f"\nlayout uses {lay.slots} wire slots:")
for e in lay.elements:
    print(f"  {type(e).__name__}: {e}")

# the clique collapses into a single square glyph spanning three slots;
# its hole fraction is 0 because no edges are missing
