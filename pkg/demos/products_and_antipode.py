"""
Products, coproducts and the antipode on small packed matrices
==============================================================

Run with ``python3 demos/products_and_antipode.py``.
"""

from packedmat import antipode_F, coproduct_F, format_matrix, over, parse_matrix, product_F, under
from packedmat.order import interval

def flat(m):
    return format_matrix(m).replace("\n", " / ")


# Two 1-packed matrices, written row by row.
a = parse_matrix("1 0\n0 1")
b = parse_matrix("1")
print("a =\n" + format_matrix(a))
print("b =\n" + format_matrix(b))

# The product shuffles the columns of b (shifted below a) among those of a.
ab = product_F(a, b)
print(f"\nF_a F_b has {len(ab)} terms:")
for m, c in ab.items():
    print(f"  {c} * {flat(m)}")

# Every term lies between the two block-diagonal extremes.
lo, hi = over(a, b), under(a, b)
print("\nsupport equals the interval [a/b, a\\b]:", ab.support() == interval(lo, hi))

# Cutting columns where both halves stay packed gives the coproduct.
m = parse_matrix("1 0 0\n0 0 1\n0 1 0")
print("\ncoproduct of", flat(m))
for (x, y), c in coproduct_F(m).items():
    print(f"  {c} * [{flat(x)}] (x) [{flat(y)}]")

# The antipode has signed coefficients; on permutation-like matrices it is short.
s = antipode_F(parse_matrix("0 1\n1 0"))
print("\nantipode of the transposition:", s)
