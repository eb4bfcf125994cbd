"""
Alternating sign matrices and six-vertex statistics
===================================================

Supports of ASMs span a Hopf subalgebra.  Each ASM is a configuration of the
six-vertex model, and counting vertices of a given type gives statistics
whose level sets define further quotients.
"""

from packedmat.asm import (
    asm_count, asms, format_asm, io_closed_forms, quotient_dims, six_vertex_stats, statistic_classes,
)

print("ASM counts:", [asm_count(n) for n in range(7)])

for a in asms(3):
    st = six_vertex_stats(a)
    print(format_asm(a).replace("\n", " / "), " ", st.as_dict())

print("\nclasses of size-3 ASMs under nw:")
for value, members in statistic_classes("nw", 3).items():
    print(f"  nw={value}: {len(members)}")

for stats in ("io", "nw", "io,nw"):
    print(f"quotient by {stats:6s}", [quotient_dims(stats, n) for n in range(7)])

# Two candidate closed forms for the io quotient; only one fits.
for name in io_closed_forms(0):
    print(f"{name:20s}", [io_closed_forms(n)[name] for n in range(7)])
