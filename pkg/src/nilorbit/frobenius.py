"""Frobenius-Lie morphisms and F-stability of nilpotent orbits.

A Frobenius-Lie morphism is a split one composed with a diagram
automorphism gamma, and only gamma matters for orbit stability: an orbit
is stable iff its weighted Dynkin diagram is fixed by gamma. Over a good
characteristic p > 3, stable orbits are exactly those with an F_q-rational
structure, so ``has_rational_point`` is set equal to ``stable``.

Descriptor names: ``F0`` is split. For A_n (n > 1), D_n (n >= 5) and E_6
the twisted class is ``F1`` (alias ``twisted``). For D_4, ``F1`` = (3 4)
and ``F2`` = (1 3) are the class representatives, and ``F3`` = (1 4) is
also accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import HypothesisError, InvalidTypeError, UnsupportedError
from .orbits import OrbitLabel, enumerate_orbit_labels, parse_label
from .roottypes import (
    DiagramAutomorphism,
    DynkinType,
    apply_automorphism,
    coxeter_number,
    diagram_automorphisms,
    good_prime,
    is_prime,
    parse_type,
)
from .wdd import WeightedDynkinDiagram, weighted_diagram

__all__ = [
    "FrobeniusDescriptor",
    "StabilityReport",
    "frobenius_classes",
    "frobenius_descriptor",
    "is_stable",
    "frobenius_image",
    "orbit_action",
    "rationality_report",
]

_D4_TWISTS = {"F1": [(3, 4)], "F2": [(1, 3)], "F3": [(1, 4)]}


@dataclass(frozen=True)
class FrobeniusDescriptor:
    dynkin_type: DynkinType
    twist: DiagramAutomorphism
    name: str

    def __post_init__(self):
        if self.twist.dynkin_type != self.dynkin_type or self.twist not in diagram_automorphisms(self.dynkin_type):
            raise InvalidTypeError(f"{self.twist.cycle_notation()} is not a diagram automorphism of {self.dynkin_type}")

    @property
    def is_split(self) -> bool:
        return self.twist.is_identity

    @property
    def display(self) -> str:
        if self.is_split:
            return f"{self.name} (split)"
        return f"{self.name} = {self.twist.cycle_notation()}"

    def __str__(self):
        return self.name


def _twisted_descriptor(t: DynkinType) -> FrobeniusDescriptor:
    gamma = diagram_automorphisms(t)[1]
    return FrobeniusDescriptor(t, gamma, "F1")


def frobenius_classes(t) -> tuple[FrobeniusDescriptor, ...]:
    """One descriptor per equivalence class, split first."""
    t = parse_type(t)
    split = FrobeniusDescriptor(t, DiagramAutomorphism.identity(t), "F0")
    if t.family == "D" and t.rank == 4:
        return (split,) + tuple(
            FrobeniusDescriptor(t, DiagramAutomorphism.from_cycles(t, _D4_TWISTS[k]), k) for k in ("F1", "F2")
        )
    if len(diagram_automorphisms(t)) == 1:
        return (split,)
    return (split, _twisted_descriptor(t))


def frobenius_descriptor(t, name) -> FrobeniusDescriptor:
    """Look up a descriptor by name.

    Accepts ``F0``/``split``, ``F1``/``twisted`` (when the nontrivial
    class is unique), the D_4 names ``F1``, ``F2``, ``F3``, or an explicit
    cycle such as ``(1 3 4)``.
    """
    t = parse_type(t)
    key = str(name).strip()
    low = key.lower()
    if low in ("f0", "split", "id", "identity"):
        return frobenius_classes(t)[0]
    if t.family == "D" and t.rank == 4 and key.upper() in _D4_TWISTS:
        k = key.upper()
        return FrobeniusDescriptor(t, DiagramAutomorphism.from_cycles(t, _D4_TWISTS[k]), k)
    if low in ("f1", "twisted"):
        if t.family == "D" and t.rank == 4:
            if low == "twisted":
                raise InvalidTypeError("D4 has two twisted classes; use F1, F2 or F3")
        classes = frobenius_classes(t)
        if len(classes) < 2:
            raise UnsupportedError(f"type {t} has only the split Frobenius class")
        return classes[1]
    if key.startswith("("):
        cycles = [tuple(int(x) for x in re.split(r"[\s,]+", c.strip()) if x)
                  for c in re.findall(r"\(([^)]*)\)", key)]
        gamma = DiagramAutomorphism.from_cycles(t, cycles)
        return FrobeniusDescriptor(t, gamma, gamma.cycle_notation())
    raise InvalidTypeError(f"unknown Frobenius class {name!r} for type {t}")


def _diagram_of(orbit, diagram=None) -> WeightedDynkinDiagram:
    if isinstance(orbit, WeightedDynkinDiagram):
        return orbit
    if diagram is not None:
        return diagram
    label = parse_label(orbit) if isinstance(orbit, str) else orbit
    try:
        return weighted_diagram(label)
    except UnsupportedError:
        raise UnsupportedError(f"no diagram available for {label}; pass diagram= explicitly") from None


def is_stable(orbit, f: FrobeniusDescriptor, diagram: WeightedDynkinDiagram | None = None) -> bool:
    """Whether the orbit is mapped to itself by f.

    ``orbit`` may be an :class:`OrbitLabel`, its string form, or a
    :class:`WeightedDynkinDiagram` (needed for types without a label
    parameterization, e.g. E_6).
    """
    d = _diagram_of(orbit, diagram)
    if d.dynkin_type != f.dynkin_type:
        raise InvalidTypeError(f"orbit of type {d.dynkin_type} with Frobenius of type {f.dynkin_type}")
    if f.is_split:
        return True
    return apply_automorphism(f.twist, d) == d


def _diagram_index(t: DynkinType) -> dict[WeightedDynkinDiagram, OrbitLabel]:
    return {weighted_diagram(x): x for x in enumerate_orbit_labels(t)}


def frobenius_image(label, f: FrobeniusDescriptor) -> OrbitLabel:
    """The orbit label whose diagram is gamma applied to the diagram of ``label``."""
    label = parse_label(label) if isinstance(label, str) else label
    image = apply_automorphism(f.twist, weighted_diagram(label))
    return _diagram_index(label.dynkin_type)[image]


def orbit_action(f: FrobeniusDescriptor) -> dict[OrbitLabel, OrbitLabel]:
    """The permutation of orbit labels induced by f, in label order."""
    t = f.dynkin_type
    if t.family not in "AD":
        raise UnsupportedError(f"orbit action needs an orbit parameterization; type {t} is not supported")
    index = _diagram_index(t)
    return {x: index[apply_automorphism(f.twist, weighted_diagram(x))] for x in enumerate_orbit_labels(t)}


@dataclass(frozen=True)
class StabilityReport:
    orbit: OrbitLabel
    frobenius: FrobeniusDescriptor
    stable: bool
    image: OrbitLabel
    has_rational_point: bool
    p_at_least_coxeter: bool

    def to_json(self) -> dict:
        return {
            "orbit": str(self.orbit),
            "frobenius": self.frobenius.name,
            "stable": self.stable,
            "image": str(self.image),
            "rational_point": self.has_rational_point,
            "p_ge_coxeter": self.p_at_least_coxeter,
        }


def _prime_power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def check_characteristic(t: DynkinType, p: int, q: int | None = None):
    if not is_prime(p):
        raise HypothesisError(f"characteristic p={p} is not prime")
    if q is not None and not _prime_power_of(q, p):
        raise HypothesisError(f"q={q} is not a power of p={p}")
    if p <= 3:
        raise HypothesisError(f"characteristic p={p} violates the hypothesis p > 3")
    if not good_prime(t, p):
        raise HypothesisError(f"p={p} is a bad prime for {t}: a good characteristic is required")


def rationality_report(t, f: FrobeniusDescriptor, p: int, q: int) -> list[StabilityReport]:
    """Stability and rational-point verdicts for every orbit of t under f, over F_q."""
    t = parse_type(t)
    if f.dynkin_type != t:
        raise InvalidTypeError(f"Frobenius of type {f.dynkin_type} used with type {t}")
    check_characteristic(t, p, q)
    action = orbit_action(f)
    big_p = p >= coxeter_number(t)
    return [
        StabilityReport(x, f, action[x] == x, action[x], action[x] == x, big_p)
        for x in enumerate_orbit_labels(t)
    ]
