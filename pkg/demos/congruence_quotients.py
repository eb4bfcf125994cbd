"""
Quotients by congruences on column words
========================================

Reading a packed matrix as a word of columns, the sylvester, plactic,
hypoplactic and total congruences give quotient Hopf algebras.  A coarser
relation which ignores column order in a naive way does not.
"""

from packedmat.congruences import class_count, validate_good_congruence

names = ("sylvester", "plactic", "hypoplactic", "total")
print("size   " + "  ".join(f"{n:>11s}" for n in names))
for n in range(4):
    print(f"{n:4d}   " + "  ".join(f"{class_count(c, 1, 'size', n):11d}" for c in names))

print()
for name in names + ("coarse",):
    rep = validate_good_congruence(name)
    print(f"{name:12s} quotient is a Hopf algebra: {rep.passed}")
