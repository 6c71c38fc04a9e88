"""
Orbit closures in type A as a Hasse diagram
===========================================

Closure order on nilpotent orbits of sl_n is dominance of partitions.
Write the covering relations as DOT; render with ``dot -Tpng``.
"""

import sys

from nilorbit.orbits import closure, closure_poset

poset = closure_poset("A5")
print(f"{len(poset.elements)} orbits, {len(poset.covers)} covering edges", file=sys.stderr)
print(poset.to_dot("sl6"))

# the orbits in the closure of [3,2,1]
print(", ".join(x.pretty() for x in closure("A5:[3,2,1]")), file=sys.stderr)
