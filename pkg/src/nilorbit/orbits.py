"""Orbit labels: partitions, very even decorations, dominance order and closures.

Nilpotent orbits of sl_{n+1} (type A_n) are labelled by partitions of
n+1. For so_{2n} (type D_n) they are labelled by partitions of 2n in which
every even part has even multiplicity, with each very even partition
labelling two orbits, decorated ``I`` and ``II``.

Labels serialize as ``A3:[2,2]`` or ``D4:[4,4]:I``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from .errors import InvalidLabelError, UnsupportedError
from .roottypes import DynkinType, parse_type

__all__ = [
    "Partition",
    "OrbitLabel",
    "partitions",
    "parse_label",
    "is_very_even",
    "is_orthogonal_partition",
    "enumerate_orbit_labels",
    "dominance_leq",
    "closure",
    "Poset",
    "closure_poset",
]

DECORATIONS = (None, "I", "II")


@dataclass(frozen=True, order=True)
class Partition:
    """A partition, stored weakly decreasing.

    >>> Partition([1, 3, 1]).parts
    (3, 1, 1)
    """

    parts: tuple[int, ...]

    def __init__(self, parts):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise InvalidLabelError(f"partition parts must be positive integers, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def pretty(self) -> str:
        """Exponent notation, e.g. ``[3,2^2,1]``."""
        out = []
        for part, mult in sorted(Counter(self.parts).items(), reverse=True):
            out.append(str(part) if mult == 1 else f"{part}^{mult}")
        return "[" + ",".join(out) + "]"


def partitions(n: int, largest: int | None = None):
    """Partitions of n in descending lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_very_even(p) -> bool:
    """All parts even, each value occurring an even number of times."""
    p = p if isinstance(p, Partition) else Partition(p)
    return all(part % 2 == 0 and mult % 2 == 0 for part, mult in p.multiplicities().items())


def is_orthogonal_partition(p) -> bool:
    """Even parts occur with even multiplicity (the so_{2n} condition)."""
    p = p if isinstance(p, Partition) else Partition(p)
    return all(mult % 2 == 0 for part, mult in p.multiplicities().items() if part % 2 == 0)


@dataclass(frozen=True)
class OrbitLabel:
    dynkin_type: DynkinType
    partition: Partition
    decoration: str | None = None

    def __post_init__(self):
        t, p, dec = self.dynkin_type, self.partition, self.decoration
        if not isinstance(p, Partition):
            object.__setattr__(self, "partition", Partition(p))
            p = self.partition
        if dec not in DECORATIONS:
            raise InvalidLabelError(f"decoration must be I, II or absent, got {dec!r}")
        if t.family == "A":
            if p.total != t.rank + 1:
                raise InvalidLabelError(f"{t} orbits are labelled by partitions of {t.rank + 1}, got {p}")
            if dec is not None:
                raise InvalidLabelError(f"type A labels carry no decoration, got {dec}")
        elif t.family == "D":
            if p.total != 2 * t.rank:
                raise InvalidLabelError(f"{t} orbits are labelled by partitions of {2 * t.rank}, got {p}")
            if not is_orthogonal_partition(p):
                raise InvalidLabelError(f"{p} is not an so_{2 * t.rank} partition: even parts need even multiplicity")
            if is_very_even(p) and dec is None:
                raise InvalidLabelError(f"{p} is very even and needs a decoration I or II")
            if not is_very_even(p) and dec is not None:
                raise InvalidLabelError(f"{p} is not very even and cannot carry decoration {dec}")
        else:
            raise UnsupportedError(
                f"partition parameterization not in scope for type {t}: only types A and D are supported"
            )

    def __str__(self):
        s = f"{self.dynkin_type}:{self.partition}"
        return s + f":{self.decoration}" if self.decoration else s

    def pretty(self) -> str:
        s = self.partition.pretty()
        return s + self.decoration if self.decoration else s

    def sort_key(self):
        """Descending lexicographic partition order, I before II."""
        return (tuple(-x for x in self.partition.parts), self.decoration or "")


_LABEL_RE = re.compile(r"\s*([A-Ga-g]_?\d+)\s*:\s*\[([^\]]*)\]\s*(?::\s*(I|II))?\s*")


def _parse_parts(body: str) -> list[int]:
    parts = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "^" in tok:
            value, mult = tok.split("^")
            parts.extend([int(value)] * int(mult))
        else:
            parts.append(int(tok))
    return parts


def parse_label(text) -> OrbitLabel:
    """Parse ``<family><rank>:[p1,p2,...]`` with an optional ``:I``/``:II`` suffix.

    Exponent shorthand inside the brackets (``[2^4]``) is accepted.
    """
    if isinstance(text, OrbitLabel):
        return text
    m = _LABEL_RE.fullmatch(text)
    if m is None:
        raise InvalidLabelError(f"cannot parse orbit label {text!r} (expected e.g. 'A3:[2,2]' or 'D4:[4,4]:I')")
    try:
        parts = _parse_parts(m.group(2))
    except ValueError:
        raise InvalidLabelError(f"bad partition in {text!r}") from None
    return OrbitLabel(parse_type(m.group(1)), Partition(parts), m.group(3))


def _require_supported(t: DynkinType):
    if t.family not in "AD":
        raise UnsupportedError(
            f"partition parameterization not in scope for type {t}: only types A and D are supported"
        )


@lru_cache(maxsize=None)
def enumerate_orbit_labels(t) -> tuple[OrbitLabel, ...]:
    """All orbit labels of a type A or D algebra, sorted descending, I before II."""
    t = parse_type(t)
    _require_supported(t)
    out = []
    if t.family == "A":
        for parts in partitions(t.rank + 1):
            out.append(OrbitLabel(t, Partition(parts)))
    else:
        for parts in partitions(2 * t.rank):
            p = Partition(parts)
            if not is_orthogonal_partition(p):
                continue
            if is_very_even(p):
                out.append(OrbitLabel(t, p, "I"))
                out.append(OrbitLabel(t, p, "II"))
            else:
                out.append(OrbitLabel(t, p))
    return tuple(out)


def dominance_leq(a, b) -> bool:
    """a <= b in the dominance order (prefix sums of a never exceed those of b)."""
    a = a if isinstance(a, Partition) else Partition(a)
    b = b if isinstance(b, Partition) else Partition(b)
    if a.total != b.total:
        raise InvalidLabelError(f"dominance order compares partitions of equal size, got {a} and {b}")
    k = max(len(a), len(b))
    pa = list(accumulate(a.parts + (0,) * (k - len(a))))
    pb = list(accumulate(b.parts + (0,) * (k - len(b))))
    return all(x <= y for x, y in zip(pa, pb))


def _require_closure_type(t: DynkinType):
    if t.family != "A":
        raise UnsupportedError(
            f"decorated closure out of scope: orbit closures are only implemented for type A, got {t}"
        )


def closure(label) -> tuple[OrbitLabel, ...]:
    """Labels of the orbits contained in the closure of ``label`` (type A only)."""
    label = parse_label(label)
    _require_closure_type(label.dynkin_type)
    return tuple(
        x for x in enumerate_orbit_labels(label.dynkin_type) if dominance_leq(x.partition, label.partition)
    )


@dataclass(frozen=True)
class Poset:
    """Finite poset given by its elements and covering pairs ``(upper, lower)``."""

    elements: tuple
    covers: tuple

    def to_dot(self, name: str = "closure") -> str:
        lines = [f'digraph "{name}" {{', "  rankdir=TB;"]
        for x in self.elements:
            lines.append(f'  "{x}" [label="{x.pretty()}"];')
        for hi, lo in self.covers:
            lines.append(f'  "{hi}" -> "{lo}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _covers(elements, leq):
    covers = []
    for hi in elements:
        for lo in elements:
            if hi == lo or not leq(lo, hi):
                continue
            if any(m != hi and m != lo and leq(lo, m) and leq(m, hi) for m in elements):
                continue
            covers.append((hi, lo))
    return tuple(covers)


def closure_poset(t, top=None) -> Poset:
    """Hasse diagram of the closure order on type-A orbits.

    With ``top`` given, restrict to the closure of that orbit.
    """
    t = parse_type(t)
    _require_closure_type(t)
    elements = closure(top) if top is not None else enumerate_orbit_labels(t)
    return Poset(elements, _covers(elements, lambda x, y: dominance_leq(x.partition, y.partition)))
