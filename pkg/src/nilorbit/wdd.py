"""Weighted Dynkin diagrams of nilpotent orbits in types A and D.

The diagram of an orbit is read off its h-list: each Jordan block of size
d contributes the sl_2 weights d-1, d-3, ..., 1-d, and the combined list is
sorted non-increasingly as h_1 >= h_2 >= ...

Type A_n: node i gets h_i - h_{i+1}.

Type D_n: chain node i (i <= n-2) gets h_i - h_{i+1}; with
a = h_{n-1} - h_n and b = h_{n-1} + h_n the fork nodes get
(top, right) = (a, b), except that a very even label decorated II gets
(b, a). This convention reproduces the published D_4 list, which is
shipped verbatim as :data:`D4_TABLE` and cross-checked against the
formula on import.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLabelError, UnsupportedError
from .orbits import OrbitLabel, Partition, enumerate_orbit_labels, is_very_even, parse_label
from .roottypes import DynkinType, build_root_system, parse_type

__all__ = [
    "HList",
    "WeightedDynkinDiagram",
    "OneParamSubgroup",
    "h_list",
    "wdd_type_A",
    "wdd_type_D",
    "d4_table",
    "weighted_diagram",
    "one_param_subgroup",
    "grading_dimension",
    "orbit_dimension",
]


@dataclass(frozen=True)
class HList:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = self.weights
        if list(w) != sorted(w, reverse=True):
            raise ValueError("h-list must be non-increasing")
        if sorted(-x for x in w) != sorted(w):
            raise ValueError("h-list must be symmetric under negation")

    def __getitem__(self, i):
        return self.weights[i]

    def __len__(self):
        return len(self.weights)


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Labels in node order 1..rank; for D_n that is chain, then top, then right."""

    dynkin_type: DynkinType
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.dynkin_type.rank:
            raise InvalidLabelError(f"{self.dynkin_type} diagram needs {self.dynkin_type.rank} labels, got {len(labels)}")
        bad = [x for x in labels if x not in (0, 1, 2)]
        if bad:
            raise InvalidLabelError(f"weighted Dynkin diagram labels must lie in {{0,1,2}}, got {labels}")

    def __getitem__(self, node: int) -> int:
        return self.labels[node - 1]

    def to_json(self) -> dict:
        return {"type": str(self.dynkin_type), "labels": {str(i): b for i, b in enumerate(self.labels, 1)}}

    @classmethod
    def from_json(cls, data: dict) -> "WeightedDynkinDiagram":
        t = parse_type(data["type"])
        labels = data["labels"]
        if isinstance(labels, dict):
            if sorted(labels, key=int) != [str(i) for i in t.nodes]:
                raise InvalidLabelError(f"{t} diagram needs labels for nodes 1..{t.rank}")
            labels = [labels[str(i)] for i in t.nodes]
        return cls(t, tuple(labels))

    def __str__(self):
        return "(" + ",".join(map(str, self.labels)) + ")"


@dataclass(frozen=True)
class OneParamSubgroup:
    """Coordinates a_1..a_r of a cocharacter in the simple coroot basis."""

    dynkin_type: DynkinType
    coefficients: tuple[int, ...]

    def pairing(self, root) -> int:
        """<root, lambda> for a root in simple-root coordinates."""
        c = build_root_system(self.dynkin_type).cartan_matrix
        a = self.coefficients
        return sum(r * sum(a[j] * c[i][j] for j in range(len(a))) for i, r in enumerate(root))

    def simple_pairings(self) -> tuple[int, ...]:
        n = len(self.coefficients)
        return tuple(self.pairing(tuple(int(i == j) for j in range(n))) for i in range(n))


def h_list(p) -> HList:
    p = p if isinstance(p, Partition) else Partition(p)
    weights = [d - 1 - 2 * k for d in p.parts for k in range(d)]
    return HList(tuple(sorted(weights, reverse=True)))


def _label(label) -> OrbitLabel:
    return parse_label(label) if isinstance(label, str) else label


def wdd_type_A(label) -> WeightedDynkinDiagram:
    label = _label(label)
    t = label.dynkin_type
    if t.family != "A":
        raise InvalidLabelError(f"wdd_type_A needs a type A label, got {label}")
    h = h_list(label.partition)
    return WeightedDynkinDiagram(t, tuple(h[i] - h[i + 1] for i in range(t.rank)))


def _type_D_formula(label: OrbitLabel) -> WeightedDynkinDiagram:
    n = label.dynkin_type.rank
    h = h_list(label.partition)
    chain = [h[i] - h[i + 1] for i in range(n - 2)]
    a = h[n - 2] - h[n - 1]
    b = h[n - 2] + h[n - 1]
    fork = (b, a) if label.decoration == "II" else (a, b)
    return WeightedDynkinDiagram(label.dynkin_type, tuple(chain) + fork)


def wdd_type_D(label) -> WeightedDynkinDiagram:
    label = _label(label)
    t = label.dynkin_type
    if t.family != "D":
        raise InvalidLabelError(f"wdd_type_D needs a type D label, got {label}")
    if t.rank == 4:
        return d4_table()[label]
    return _type_D_formula(label)


_D4 = DynkinType("D", 4)

# (left, central, top, right), as printed for so_8
D4_TABLE_PUBLISHED = {
    ((7, 1), None): (2, 2, 2, 2),
    ((5, 3), None): (2, 0, 2, 2),
    ((2, 2, 1, 1, 1, 1), None): (0, 1, 0, 0),
    ((1,) * 8, None): (0, 0, 0, 0),
    ((4, 4), "I"): (0, 2, 0, 2),
    ((4, 4), "II"): (0, 2, 2, 0),
    ((5, 1, 1, 1), None): (2, 2, 0, 0),
    ((2, 2, 2, 2), "I"): (0, 0, 0, 2),
    ((2, 2, 2, 2), "II"): (0, 0, 2, 0),
    ((3, 1, 1, 1, 1, 1), None): (2, 0, 0, 0),
}


def _build_d4_table() -> dict[OrbitLabel, WeightedDynkinDiagram]:
    table = {}
    for label in enumerate_orbit_labels(_D4):
        key = (label.partition.parts, label.decoration)
        formula = _type_D_formula(label)
        if key in D4_TABLE_PUBLISHED:
            published = WeightedDynkinDiagram(_D4, D4_TABLE_PUBLISHED[key])
            if published != formula:
                raise AssertionError(f"D4 table and formula disagree at {label}: {published} vs {formula}")
            table[label] = published
        else:
            table[label] = formula
    return table


_D4_TABLE = _build_d4_table()


def d4_table() -> dict[OrbitLabel, WeightedDynkinDiagram]:
    """All twelve so_8 orbit diagrams: the ten published ones plus [3^2,1^2] and [3,2^2,1]."""
    return dict(_D4_TABLE)


def weighted_diagram(label) -> WeightedDynkinDiagram:
    """Diagram of an orbit label of type A or D."""
    label = _label(label)
    fam = label.dynkin_type.family
    if fam == "A":
        return wdd_type_A(label)
    if fam == "D":
        return wdd_type_D(label)
    raise UnsupportedError(f"no diagram formula for type {label.dynkin_type}; supply the diagram directly")


def _solve_exact(matrix, rhs):
    """Solve a square nonsingular system over the rationals."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def one_param_subgroup(d: WeightedDynkinDiagram) -> OneParamSubgroup:
    """The cocharacter lambda with <alpha_j, lambda> = label at node j."""
    c = build_root_system(d.dynkin_type).cartan_matrix
    sol = _solve_exact(c, d.labels)
    if any(x.denominator != 1 for x in sol):
        raise InvalidLabelError(
            f"not a weighted Dynkin diagram of this root system: {d} needs non-integral coroot coefficients {sol}"
        )
    return OneParamSubgroup(d.dynkin_type, tuple(int(x) for x in sol))


def _pairings(d: WeightedDynkinDiagram):
    lam = one_param_subgroup(d)
    return [lam.pairing(r) for r in build_root_system(d.dynkin_type).roots]


def grading_dimension(d: WeightedDynkinDiagram, i: int) -> int:
    """dim g(lambda, i): roots pairing to i with lambda, plus the Cartan for i = 0."""
    dim = sum(1 for x in _pairings(d) if x == i)
    return dim + d.dynkin_type.rank if i == 0 else dim


def orbit_dimension(d: WeightedDynkinDiagram) -> int:
    dim_g = build_root_system(d.dynkin_type).dimension
    pairs = _pairings(d)
    g0 = d.dynkin_type.rank + pairs.count(0)
    g1 = pairs.count(1)
    return dim_g - g0 - g1
