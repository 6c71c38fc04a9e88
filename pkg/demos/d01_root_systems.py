"""
Root systems and diagram symmetries
===================================

Build a few Cartan matrices, count positive roots, and list the
symmetries of each Dynkin diagram.
"""

from nilorbit.roottypes import (
    build_root_system,
    cartan_matrix,
    coxeter_number,
    diagram_automorphisms,
    parse_type,
)

# D4 has the three-legged diagram; node 2 is the centre
d4 = parse_type("D4")
for row in cartan_matrix(d4):
    print(" ".join(f"{c:3d}" for c in row))

# |Phi+| = rank * h / 2 for every irreducible type
for name in ("A5", "B4", "C4", "D4", "E6", "F4", "G2"):
    t = parse_type(name)
    rs = build_root_system(t)
    print(f"{name}: {len(rs.positive_roots)} positive roots, dim {rs.dimension}, h = {coxeter_number(t)}")

# triality: the full symmetric group on the three outer nodes
for g in diagram_automorphisms(d4):
    print(g.cycle_notation(), "order", g.order)
