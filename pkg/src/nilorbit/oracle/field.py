"""Small finite fields F_p and F_{p^2} with table arithmetic.

Elements are encoded as integers ``a0 + a1 * p`` standing for ``a0 + a1 x``
in F_p[x]/(f), where f is the lexicographically smallest monic irreducible
quadratic. All operations are table lookups, so they vectorize over numpy
integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..roottypes import is_prime

__all__ = ["GF", "FqElement", "FqMatrix", "field_of_order"]


def _smallest_irreducible_quadratic(p: int) -> tuple[int, int]:
    """(c1, c0) for x^2 + c1 x + c0, smallest in (c1, c0) order."""
    for c1 in range(p):
        for c0 in range(p):
            if all((x * x + c1 * x + c0) % p for x in range(p)):
                return c1, c0
    raise AssertionError("unreachable: irreducible quadratics exist over every F_p")


class GF:
    """The field F_{p^k}, k in {1, 2}."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k not in (1, 2):
            raise ValueError("only F_p and F_{p^2} are supported")
        self.p, self.k = p, k
        self.order = q = p**k
        self.modulus = _smallest_irreducible_quadratic(p) if k == 2 else None

        a0, a1 = np.divmod(np.arange(q), p)[::-1]
        self.add = ((a0[:, None] + a0[None, :]) % p + p * ((a1[:, None] + a1[None, :]) % p)).astype(np.int16)
        self.neg = ((-a0) % p + p * ((-a1) % p)).astype(np.int16)
        self.sub = self.add[:, self.neg]
        if k == 1:
            self.mul = ((a0[:, None] * a0[None, :]) % p).astype(np.int16)
        else:
            c1, c0 = self.modulus
            # (a0 + a1 x)(b0 + b1 x) with x^2 = -c1 x - c0
            hi = a1[:, None] * a1[None, :]
            lo = a0[:, None] * a0[None, :] - c0 * hi
            mid = a0[:, None] * a1[None, :] + a1[:, None] * a0[None, :] - c1 * hi
            self.mul = (lo % p + p * (mid % p)).astype(np.int16)
        self.inv = np.zeros(q, dtype=np.int16)
        for x in range(1, q):
            self.inv[x] = int(np.nonzero(self.mul[x] == 1)[0][0])
        self.frob = self.power_table(p)

    def __repr__(self):
        return f"GF({self.order})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    @property
    def elements(self):
        return range(self.order)

    def power_table(self, e: int) -> np.ndarray:
        """x -> x**e for every element."""
        out = np.ones(self.order, dtype=np.int16)
        base = np.arange(self.order, dtype=np.int16)
        while e:
            if e & 1:
                out = self.mul[out, base]
            base = self.mul[base, base]
            e >>= 1
        return out

    def frobenius_table(self, q: int) -> np.ndarray:
        """x -> x**q, q a power of p."""
        r = q
        while r % self.p == 0:
            r //= self.p
        if r != 1:
            raise ValueError(f"{q} is not a power of the characteristic {self.p}")
        return self.power_table(q)

    def element(self, value: int) -> "FqElement":
        return FqElement(self, int(value))

    def generator(self) -> "FqElement":
        """The class of x in F_p[x]/(f) (or 1 when k = 1)."""
        return self.element(self.p if self.k == 2 else 1)


@lru_cache(maxsize=None)
def field_of_order(q: int) -> GF:
    for p in range(2, q + 1):
        if q % p == 0:
            break
    if q == p:
        return GF(p, 1)
    if q == p * p:
        return GF(p, 2)
    raise ValueError(f"only fields of order p or p^2 are supported, got {q}")


@dataclass(frozen=True)
class FqElement:
    field: GF
    value: int

    def _check(self, other):
        if not isinstance(other, FqElement):
            other = FqElement(self.field, int(other) % self.field.p)
        if other.field != self.field:
            raise ValueError("elements of different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FqElement(self.field, int(self.field.add[self.value, other.value]))

    def __sub__(self, other):
        other = self._check(other)
        return FqElement(self.field, int(self.field.sub[self.value, other.value]))

    def __mul__(self, other):
        other = self._check(other)
        return FqElement(self.field, int(self.field.mul[self.value, other.value]))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FqElement(self.field, int(self.field.neg[self.value]))

    def __truediv__(self, other):
        other = self._check(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in finite field")
        return self * FqElement(self.field, int(self.field.inv[other.value]))

    def __pow__(self, e: int):
        if e < 0:
            return FqElement(self.field, 1) / self ** (-e)
        out = FqElement(self.field, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FqElement({self.value} in GF({self.field.order}))"


@dataclass(frozen=True, eq=False)
class FqMatrix:
    """A square matrix over a finite field, entries stored as encoded ints."""

    field: GF
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int16)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"FqMatrix must be square, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= self.field.order):
            raise ValueError(f"entries outside GF({self.field.order})")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        return isinstance(other, FqMatrix) and self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.field, self.entries.tobytes()))

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        from .enumerate import batch_matmul

        return FqMatrix(self.field, batch_matmul(self.field, self.entries[None], other.entries[None])[0])

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __repr__(self):
        return f"FqMatrix(GF({self.field.order}), {self.tolist()})"
