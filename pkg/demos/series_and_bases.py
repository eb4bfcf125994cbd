"""
Graded dimensions, generators and primitive elements
====================================================

The Hilbert series of the algebra graded by size or by number of nonzero
entries, and what it says about free generators and primitives.
"""

from packedmat.bases import V_expand, connected_count, hilbert_series, is_primitive
from packedmat.enumeration import enumerate_packed
from packedmat.matrix import is_connected
from packedmat.series import series_generators, series_totally_primitive

for grading, order in (("size", 4), ("weight", 6)):
    h = hilbert_series(1, grading, order)
    print(f"by {grading:6s}: dims        {list(h.coeffs)}")
    print(f"{'':10s} generators  {list(series_generators(h).coeffs)}")
    print(f"{'':10s} primitives  {list(series_totally_primitive(h).coeffs)}")

# Generators can be taken to be the connected matrices.
print("\nconnected matrices by size:", [connected_count(1, n) for n in range(4)])

# The V basis, indexed by connected matrices, consists of primitive elements.
for n in (1, 2):
    conn = [m for m in enumerate_packed(1, n) if is_connected(m)]
    print(f"size {n}: {len(conn)} connected, all V primitive:",
          all(is_primitive(V_expand(m)) for m in conn))
