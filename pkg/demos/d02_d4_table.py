"""
The twelve nilpotent orbits of so8
==================================

Weighted diagrams from h-lists, orbit dimensions from the grading, and
how each Frobenius class permutes the labels.
"""

from nilorbit.frobenius import frobenius_classes, frobenius_descriptor, orbit_action
from nilorbit.wdd import d4_table, h_list, orbit_dimension

for label, diagram in d4_table().items():
    print(f"{label.pretty():12s} {str(diagram):12s} dim {orbit_dimension(diagram):2d}  h = {h_list(label.partition).weights}")

# (3 4) swaps the decorations; (1 3) and (1 4) trade a decorated orbit for an undecorated one
for f in frobenius_classes("D4")[1:] + (frobenius_descriptor("D4", "F3"),):
    print(f.display)
    for x, y in orbit_action(f).items():
        if x != y:
            print(f"    {x.pretty()} -> {y.pretty()}")
