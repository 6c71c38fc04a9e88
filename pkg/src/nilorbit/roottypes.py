"""Root systems, Cartan matrices and Dynkin diagram automorphisms.

Nodes are numbered 1..rank following Bourbaki. For D_n the chain is
1..n-2 and the two fork nodes are n-1 ("top") and n ("right"); for D_4
this reads 1 = left, 2 = central, 3 = top, 4 = right.

Roots are integer coefficient vectors in the simple-root basis and the
Cartan matrix is ``C[i][j] = <alpha_i, alpha_j^vee>``, so every pairing is
an exact integer computation.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidTypeError

__all__ = [
    "DynkinType",
    "RootSystem",
    "DiagramAutomorphism",
    "parse_type",
    "cartan_matrix",
    "build_root_system",
    "diagram_automorphisms",
    "good_prime",
    "coxeter_number",
    "apply_automorphism",
    "is_prime",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

_COXETER = {("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 12, ("G", 2): 6}

# smallest prime that is not bad, per family
_GOOD_FROM = {"A": 2, "B": 3, "C": 3, "D": 3, "G": 5, "F": 5, "E": 5}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in "ABCDEFG" or len(fam) != 1:
            raise InvalidTypeError(f"unknown Lie type family {fam!r}")
        if not isinstance(n, int) or n < 1:
            raise InvalidTypeError(f"rank must be a positive integer, got {n!r}")
        if fam in _MIN_RANK and n < _MIN_RANK[fam]:
            raise InvalidTypeError(
                f"type {fam}{n} is not a simple type: {fam}_n needs n >= {_MIN_RANK[fam]}"
            )
        if fam == "E" and n not in (6, 7, 8):
            raise InvalidTypeError(f"type E{n} does not exist: E_n needs n in {{6, 7, 8}}")
        if fam == "F" and n != 4:
            raise InvalidTypeError(f"type F{n} does not exist: only F4")
        if fam == "G" and n != 2:
            raise InvalidTypeError(f"type G{n} does not exist: only G2")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))


def parse_type(text) -> DynkinType:
    """Parse ``"D4"``, ``"d4"`` or ``"E_6"`` into a :class:`DynkinType`."""
    if isinstance(text, DynkinType):
        return text
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", str(text))
    if m is None:
        raise InvalidTypeError(f"cannot parse Lie type {text!r} (expected e.g. 'A3', 'D4')")
    return DynkinType(m.group(1).upper(), int(m.group(2)))


def _edges(t: DynkinType):
    """Simple edges (i, j) of the underlying graph, 1-based."""
    n = t.rank
    if t.family in "ABCFG":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E: 1-3-4-5-...-n with 2 attached to 4
    return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]


@lru_cache(maxsize=None)
def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        c[i - 1][j - 1] = c[j - 1][i - 1] = -1
    # multiple bonds; alpha_j short means C[i][j] = -2 or -3
    if t.family == "B":
        c[n - 2][n - 1] = -2
    elif t.family == "C":
        c[n - 1][n - 2] = -2
    elif t.family == "F":
        c[1][2] = -2
    elif t.family == "G":
        c[1][0] = -3
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True)
class RootSystem:
    dynkin_type: DynkinType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    node_ids: tuple[int, ...] = field(default=())

    @property
    def rank(self) -> int:
        return self.dynkin_type.rank

    @property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        """All roots, positive first then their negatives."""
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra: rank plus number of roots."""
        return self.rank + 2 * len(self.positive_roots)

    def coroot_pairing(self, root, i: int) -> int:
        """``<root, alpha_i^vee>`` for a root given in simple-root coordinates (i is 1-based)."""
        return sum(c * self.cartan_matrix[k][i - 1] for k, c in enumerate(root))


@lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    """Generate the positive roots by root-string closure from the simple roots.

    For a positive root beta and a simple root alpha_i, the alpha_i-string
    through beta runs from beta - p alpha_i to beta + q alpha_i with
    p - q = <beta, alpha_i^vee>; beta + alpha_i is a root iff q > 0.
    Roots are processed height by height so every p is known in time.
    """
    t = parse_type(t)
    c = cartan_matrix(t)
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                pairing = sum(beta[k] * c[k][i] for k in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        ordered.extend(nxt)
        layer = nxt
    return RootSystem(t, c, tuple(ordered), t.nodes)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A Cartan-matrix preserving permutation of the diagram nodes.

    ``perm[i - 1]`` is the image of node ``i``.
    """

    dynkin_type: DynkinType
    perm: tuple[int, ...]

    def __post_init__(self):
        n = self.dynkin_type.rank
        if sorted(self.perm) != list(range(1, n + 1)):
            raise InvalidTypeError(f"{self.perm} is not a permutation of the nodes of {self.dynkin_type}")
        c = cartan_matrix(self.dynkin_type)
        for i in range(n):
            for j in range(n):
                if c[self.perm[i] - 1][self.perm[j] - 1] != c[i][j]:
                    raise InvalidTypeError(
                        f"{self.cycle_notation()} does not preserve the Cartan matrix of {self.dynkin_type}"
                    )

    def __call__(self, node: int) -> int:
        return self.perm[node - 1]

    @classmethod
    def identity(cls, t: DynkinType) -> "DiagramAutomorphism":
        return cls(t, t.nodes)

    @classmethod
    def from_cycles(cls, t: DynkinType, cycles) -> "DiagramAutomorphism":
        """Build from disjoint cycles, e.g. ``[(3, 4)]``."""
        perm = list(t.nodes)
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                perm[a - 1] = b
        return cls(t, tuple(perm))

    @property
    def is_identity(self) -> bool:
        return self.perm == self.dynkin_type.nodes

    @property
    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity:
            g = g.compose(self)
            k += 1
        return k

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        """``self o other``: apply ``other`` first."""
        if other.dynkin_type != self.dynkin_type:
            raise InvalidTypeError("cannot compose automorphisms of different types")
        return DiagramAutomorphism(self.dynkin_type, tuple(self(other(i)) for i in self.dynkin_type.nodes))

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return DiagramAutomorphism(self.dynkin_type, tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in self.dynkin_type.nodes:
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@lru_cache(maxsize=None)
def diagram_automorphisms(t: DynkinType) -> tuple[DiagramAutomorphism, ...]:
    """All node permutations preserving the Cartan matrix, identity first.

    Found by exhaustive search over permutations of nodes with equal
    degree; this is cheap because only branch and end nodes can move.
    """
    t = parse_type(t)
    c = cartan_matrix(t)
    n = t.rank
    degree = [sum(1 for j in range(n) if j != i and c[i][j]) for i in range(n)]
    candidates = [[j for j in range(n) if degree[j] == degree[i]] for i in range(n)]

    out = []

    def extend(prefix):
        i = len(prefix)
        if i == n:
            out.append(tuple(k + 1 for k in prefix))
            return
        for j in candidates[i]:
            if j in prefix:
                continue
            if all(c[j][prefix[k]] == c[i][k] and c[prefix[k]][j] == c[k][i] for k in range(i)):
                extend(prefix + [j])

    extend([])
    out.sort(key=lambda p: (p != t.nodes, p))
    return tuple(DiagramAutomorphism(t, p) for p in out)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def good_prime(t: DynkinType, p: int) -> bool:
    """True iff p exceeds every coefficient of every positive root."""
    t = parse_type(t)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p > max(build_root_system(t).highest_root)


def good_prime_by_family(t: DynkinType, p: int) -> bool:
    """The same predicate read off the usual case list (p>2 for B/C/D, ...)."""
    t = parse_type(t)
    if t.family == "E" and t.rank == 8:
        return p > 5
    return p >= _GOOD_FROM[t.family]


def coxeter_number(t: DynkinType) -> int:
    t = parse_type(t)
    n = t.rank
    if t.family == "A":
        return n + 1
    if t.family in "BC":
        return 2 * n
    if t.family == "D":
        return 2 * n - 2
    return _COXETER[(t.family, n)]


def apply_automorphism(gamma: DiagramAutomorphism, d):
    """Move diagram labels along gamma: the label at node i lands on gamma(i)."""
    from .wdd import WeightedDynkinDiagram

    if gamma.dynkin_type != d.dynkin_type:
        raise InvalidTypeError(f"automorphism of {gamma.dynkin_type} applied to a diagram of {d.dynkin_type}")
    labels = [0] * gamma.dynkin_type.rank
    for i in gamma.dynkin_type.nodes:
        labels[gamma(i) - 1] = d.labels[i - 1]
    return WeightedDynkinDiagram(d.dynkin_type, tuple(labels))


def all_permutations_preserving(t: DynkinType):
    """Brute-force reference for :func:`diagram_automorphisms` (tests only, small rank)."""
    c = cartan_matrix(t)
    n = t.rank
    for perm in itertools.permutations(range(n)):
        if all(c[perm[i]][perm[j]] == c[i][j] for i in range(n) for j in range(n)):
            yield tuple(k + 1 for k in perm)
