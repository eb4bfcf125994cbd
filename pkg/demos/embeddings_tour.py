"""
Colored permutations and uniform block permutations inside packed matrices
==========================================================================
"""

from packedmat import ColoredPermutation, UniformBlockPermutation, alpha, beta, format_matrix, product_F
from packedmat.embeddings import shifted_shuffle, ubp_counts, weak_order_check

p = ColoredPermutation.parse("21:12")
q = ColoredPermutation.parse("1:2", k=2)
print("alpha(21:12) =\n" + format_matrix(alpha(p)))

# The product of images is the image of the shifted shuffle.
lhs = product_F(alpha(p), alpha(q))
rhs = {alpha(r) for r in shifted_shuffle(p, q)}
print("\nshuffle correspondence:", lhs.support() == rhs, f"({len(rhs)} terms)")

# On permutation matrices the covers of the order are right weak order covers.
for n in range(5):
    ok, edges = weak_order_check(n)
    print(f"n={n}: {edges:3d} covers, weak order agrees: {ok}")

u = UniformBlockPermutation.parse("{1,4,5}->{2,5,6}; {2}->{1}; {3,6}->{3,4}")
print("\nbeta(u) =\n" + format_matrix(beta(u)))
print("transpose is beta of the inverse:", beta(u).transpose() == beta(u.inverse()))
print("uniform block permutations by size:", ubp_counts(4))
