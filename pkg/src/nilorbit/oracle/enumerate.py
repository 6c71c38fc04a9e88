"""Exhaustive nilpotent enumeration over small finite fields.

Matrices are handled in batches of shape (N, n, n) holding encoded field
elements; every arithmetic step is a table lookup. Candidate matrices are
indexed 0..q^(n^2)-1 by their row-major base-q digits, which makes the
scan easy to split into chunks (and across processes) while keeping the
output order fixed.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import BudgetError
from ..orbits import Partition, partitions
from .field import GF, FqMatrix, field_of_order

__all__ = [
    "DEFAULT_BUDGET",
    "enumeration_budget",
    "batch_matmul",
    "batch_rank",
    "batch_jordan_types",
    "jordan_type",
    "jordan_matrix_fq",
    "standard_frobenius",
    "twisted_frobenius_A",
    "enumerate_nilpotent",
    "nilpotent_array",
    "VerificationReport",
    "verify_orbit_stability",
    "twisted_fixed_space",
    "find_fixed_point",
    "fixed_point_census",
]

# n = 3 up to F_5, n = 4 over F_2 only
DEFAULT_BUDGET = 2_000_000

CHUNK = 1 << 18


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("NILORBIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _field(f) -> GF:
    if isinstance(f, GF):
        return f
    if isinstance(f, tuple):
        return GF(*f)
    return field_of_order(int(f))


def batch_matmul(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    n = A.shape[-1]
    out = np.zeros(np.broadcast_shapes(A.shape, B.shape), dtype=np.int16)
    for k in range(n):
        out = F.add[out, F.mul[A[:, :, k, None], B[:, None, k, :]]]
    return out


def batch_rank(F: GF, A: np.ndarray) -> np.ndarray:
    """Row rank of each matrix in the batch, by Gauss-Jordan elimination."""
    A = np.array(A, dtype=np.int16, copy=True)
    N, r, c = A.shape
    row = np.zeros(N, dtype=np.int64)
    rows = np.arange(r)
    for col in range(c):
        mask = (A[:, :, col] != 0) & (rows[None, :] >= row[:, None])
        idx = np.nonzero(mask.any(axis=1))[0]
        if idx.size == 0:
            continue
        piv = np.argmax(mask[idx], axis=1)
        tgt = row[idx]
        a, b = A[idx, tgt].copy(), A[idx, piv].copy()
        A[idx, tgt], A[idx, piv] = b, a
        scale = F.inv[A[idx, tgt, col]]
        A[idx, tgt] = F.mul[scale[:, None], A[idx, tgt]]
        prow = A[idx, tgt]
        for i in range(r):
            sel = tgt != i
            if not sel.any():
                continue
            j = idx[sel]
            factor = A[j, i, col]
            A[j, i] = F.sub[A[j, i], F.mul[factor[:, None], prow[sel]]]
        row[idx] += 1
    return row


def _power_ranks(F: GF, A: np.ndarray) -> list[np.ndarray]:
    """rank(A^0), rank(A^1), ..., rank(A^n) for each matrix."""
    N, n, _ = A.shape
    ranks = [np.full(N, n)]
    P = A
    for _ in range(n):
        ranks.append(batch_rank(F, P))
        P = batch_matmul(F, P, A)
    return ranks


def batch_jordan_types(F: GF, A: np.ndarray) -> list[Partition]:
    """Jordan types of a batch of nilpotent matrices.

    The number of blocks of size >= j is rank(A^(j-1)) - rank(A^j).
    """
    A = np.asarray(A, dtype=np.int16)
    ranks = _power_ranks(F, A)
    if (ranks[-1] != 0).any():
        bad = int(np.nonzero(ranks[-1])[0][0])
        raise ValueError(f"matrix is not nilpotent: {A[bad].tolist()}")
    n = A.shape[1]
    at_least = np.stack([ranks[j - 1] - ranks[j] for j in range(1, n + 1)], axis=1)
    out = []
    cache = {}
    for row in at_least:
        key = row.tobytes()
        if key not in cache:
            parts = []
            for j in range(n, 0, -1):
                exact = int(row[j - 1]) - (int(row[j]) if j < n else 0)
                parts.extend([j] * exact)
            cache[key] = Partition(parts)
        out.append(cache[key])
    return out


def jordan_type(M: FqMatrix) -> Partition:
    return batch_jordan_types(M.field, M.entries[None])[0]


def jordan_matrix_fq(F, partition) -> FqMatrix:
    """Block-diagonal nilpotent Jordan matrix with ones on the superdiagonal."""
    F = _field(F)
    p = partition if isinstance(partition, Partition) else Partition(partition)
    n = p.total
    a = np.zeros((n, n), dtype=np.int16)
    start = 0
    for d in p.parts:
        for i in range(start, start + d - 1):
            a[i, i + 1] = 1
        start += d
    return FqMatrix(F, a)


def _batch_standard(F: GF, A: np.ndarray, q: int) -> np.ndarray:
    return F.frobenius_table(q)[A]


def _batch_twisted(F: GF, A: np.ndarray, q: int) -> np.ndarray:
    return F.neg[F.frobenius_table(q)[A]].swapaxes(-1, -2)


_MAPS = {"standard": _batch_standard, "twisted": _batch_twisted}


def standard_frobenius(M: FqMatrix, q: int) -> FqMatrix:
    """Raise every entry to the q-th power."""
    return FqMatrix(M.field, _batch_standard(M.field, M.entries, q))


def twisted_frobenius_A(M: FqMatrix, q: int) -> FqMatrix:
    """M -> -(M^(q))^T, the nontrivial diagram twist of sl_n after Frobenius."""
    return FqMatrix(M.field, _batch_twisted(M.field, M.entries, q))


def _check_budget(F: GF, n: int, budget) -> int:
    total = F.order ** (n * n)
    limit = enumeration_budget(budget)
    if total > limit:
        raise BudgetError(total, limit)
    return total


def _digits(q: int, start: int, stop: int, width: int) -> np.ndarray:
    """Base-q digits (most significant first) of start..stop-1."""
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((stop - start, width), dtype=np.int16)
    for pos in range(width - 1, -1, -1):
        idx, digits[:, pos] = np.divmod(idx, q)
    return digits


def _decode(F: GF, n: int, start: int, stop: int) -> np.ndarray:
    return _digits(F.order, start, stop, n * n).reshape(-1, n, n)


def _is_nilpotent(F: GF, A: np.ndarray) -> np.ndarray:
    n = A.shape[1]
    P = A
    for _ in range(n - 1):
        P = batch_matmul(F, P, A)
    return ~P.reshape(len(A), -1).any(axis=1)


def _low_digits(n: int, q: int) -> int:
    m = 0
    while m < n * n and q ** (m + 1) <= CHUNK:
        m += 1
    return m


_GRIDS: dict = {}


def _grid(F: GF, n: int, m: int):
    """All assignments of the last m row-major entries, bucketed by their diagonal sum."""
    key = (F.p, F.k, n, m)
    if key not in _GRIDS:
        low = _digits(F.order, 0, F.order**m, m)
        # low digits occupy flat positions n*n-m .. n*n-1
        part = np.zeros(len(low), dtype=np.int16)
        for i in range(n):
            pos = i * (n + 1) - (n * n - m)
            if pos >= 0:
                part = F.add[part, low[:, pos]]
        _GRIDS[key] = (low, {t: low[part == t] for t in range(F.order)})
    return _GRIDS[key]


def _scan_chunk(args) -> np.ndarray:
    """Nilpotents among the candidates whose leading entries encode ``high``."""
    p, k, n, m, high = args
    F = GF(p, k)
    head = _digits(F.order, high, high + 1, n * n - m)[0]
    partial = 0
    for i in range(n):
        pos = i * (n + 1)
        if pos < n * n - m:
            partial = int(F.add[partial, head[pos]])
    # keep only completions with total trace zero
    low = _grid(F, n, m)[1][int(F.neg[partial])]
    A = np.empty((len(low), n * n), dtype=np.int16)
    A[:, : n * n - m] = head
    A[:, n * n - m :] = low
    A = A.reshape(-1, n, n)
    return A[_is_nilpotent(F, A)]


def nilpotent_array(n: int, F, budget: int | None = None, workers: int = 1) -> np.ndarray:
    """All nilpotent n x n matrices over F as an (N, n, n) array, in index order.

    Every one of the q^(n^2) candidates is visited; those with nonzero trace
    are discarded before the power test.
    """
    F = _field(F)
    _check_budget(F, n, budget)
    m = _low_digits(n, F.order)
    jobs = [(F.p, F.k, n, m, high) for high in range(F.order ** (n * n - m))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
    else:
        parts = [_scan_chunk(j) for j in jobs]
    return np.concatenate(parts) if parts else np.zeros((0, n, n), dtype=np.int16)


def enumerate_nilpotent(n: int, F, budget: int | None = None):
    """Yield every nilpotent n x n matrix over F (field, order, or (p, k))."""
    F = _field(F)
    for a in nilpotent_array(n, F, budget):
        yield FqMatrix(F, a)


@dataclass
class VerificationReport:
    n: int
    field_order: int
    map: str
    frobenius_q: int
    candidates: int
    nilpotent: int
    type_counts: dict = field(default_factory=dict)
    passed: bool = True
    counterexample: list | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.field_order,
            "map": self.map,
            "frobenius_q": self.frobenius_q,
            "candidates": self.candidates,
            "nilpotent": self.nilpotent,
            "type_counts": {str(k): v for k, v in sorted(self.type_counts.items(), reverse=True)},
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


def verify_orbit_stability(
    n: int, F, map: str = "standard", q: int | None = None, budget: int | None = None, workers: int = 1
) -> VerificationReport:
    """Check that the chosen Frobenius map preserves the Jordan type of every nilpotent matrix.

    ``q`` is the Frobenius exponent and defaults to the characteristic.
    """
    F = _field(F)
    if map not in _MAPS:
        raise ValueError(f"map must be one of {sorted(_MAPS)}, got {map!r}")
    q = F.p if q is None else q
    A = nilpotent_array(n, F, budget, workers)
    before = batch_jordan_types(F, A)
    image = _MAPS[map](F, A, q)
    after = batch_jordan_types(F, image)
    report = VerificationReport(n, F.order, map, q, F.order ** (n * n), len(A), dict(Counter(before)))
    for i, (x, y) in enumerate(zip(before, after)):
        if x != y:
            report.passed = False
            report.counterexample = A[i].tolist()
            break
    return report


def twisted_fixed_space(n: int, p: int) -> np.ndarray:
    """Every n x n matrix over F_{p^2} fixed by M -> -(M^(p))^T.

    Such a matrix is determined by its strict upper triangle (free) and a
    diagonal of solutions of d = -d^p, so the q^(n^2) fixed matrices are
    listed directly instead of filtering all q^(2n^2) candidates.
    """
    F = GF(p, 2)
    frob = F.frobenius_table(p)
    diag_vals = np.array([x for x in F.elements if F.neg[frob[x]] == x], dtype=np.int16)
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    grids = np.meshgrid(*([diag_vals] * n + [np.arange(F.order, dtype=np.int16)] * len(upper)), indexing="ij")
    cols = [g.ravel() for g in grids]
    M = np.zeros((cols[0].size if cols else 1, n, n), dtype=np.int16)
    for i in range(n):
        M[:, i, i] = cols[i]
    for (i, j), c in zip(upper, cols[n:]):
        M[:, i, j] = c
        M[:, j, i] = F.neg[frob[c]]
    return M


def fixed_point_census(n: int, p: int) -> dict[Partition, FqMatrix]:
    """First twisted-fixed nilpotent matrix of each Jordan type over F_{p^2}."""
    F = GF(p, 2)
    M = twisted_fixed_space(n, p)
    M = M[_is_nilpotent(F, M)]
    found = {}
    for a, t in zip(M, batch_jordan_types(F, M)):
        if t not in found:
            found[t] = FqMatrix(F, a)
    return found


def find_fixed_point(jordan, p: int, map: str = "twisted", budget: int | None = None) -> FqMatrix | None:
    """A nilpotent matrix over F_{p^2} of the given Jordan type fixed by the chosen Frobenius, or None."""
    jordan = jordan if isinstance(jordan, Partition) else Partition(jordan)
    n = jordan.total
    F = GF(p, 2)
    if map == "standard":
        # fixed points of the standard map are the matrices over F_p
        return jordan_matrix_fq(F, jordan)
    if map != "twisted":
        raise ValueError(f"map must be 'standard' or 'twisted', got {map!r}")
    limit = enumeration_budget(budget)
    if p ** (n * n) > limit:
        raise BudgetError(p ** (n * n), limit)
    return fixed_point_census(n, p).get(jordan)


def all_jordan_types(n: int) -> list[Partition]:
    return [Partition(x) for x in partitions(n)]
