"""Exact centralizer dimensions of nilpotent matrices over the rationals.

Used as an independent check on orbit dimensions computed from weighted
Dynkin diagrams: dim(orbit) = dim(ambient) - dim(centralizer).

For so_{2n} the form is an orthogonal sum of one block per odd part and one
block per pair of equal even parts, each with its own antidiagonal-type
form; this makes every Jordan representative a plain block matrix.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidLabelError
from ..orbits import OrbitLabel, Partition, is_orthogonal_partition, parse_label

__all__ = [
    "rank_exact",
    "jordan_matrix",
    "orthogonal_representative",
    "so_basis",
    "in_so",
    "centralizer_dim",
]


def rank_exact(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / pr[col]
                m[r] = [x - f * y for x, y in zip(m[r], pr)]
        rank += 1
    return rank


def _zeros(n):
    return [[0] * n for _ in range(n)]


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _inverse(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        m[col] = [x / m[col][col] for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def jordan_matrix(partition) -> list[list[int]]:
    """Nilpotent Jordan matrix, ones on the superdiagonal of each block."""
    p = partition if isinstance(partition, Partition) else Partition(partition)
    n = p.total
    j = _zeros(n)
    start = 0
    for d in p.parts:
        for i in range(start, start + d - 1):
            j[i][i + 1] = 1
        start += d
    return j


def _place(big, small, offset):
    for i, row in enumerate(small):
        for k, x in enumerate(row):
            big[offset + i][offset + k] = x


def _odd_block(d):
    """(J_d, form) with B(e_i, e_j) = (-1)^i when i + j = d + 1."""
    form = _zeros(d)
    for i in range(1, d + 1):
        form[i - 1][d - i] = (-1) ** i
    return jordan_matrix([d]), form


def _paired_block(d):
    """(J_d + J_d, form) pairing the two copies: B(e_i, f_j) = (-1)^i when i + j = d + 1."""
    form = _zeros(2 * d)
    for i in range(1, d + 1):
        j = d + 1 - i
        form[i - 1][d + j - 1] = (-1) ** i
        form[d + j - 1][i - 1] = (-1) ** i
    return jordan_matrix([d, d]), form


def _reflection(form):
    """Reflection in a non-isotropic basis vector: an element of O(form) of determinant -1."""
    n = len(form)
    v = next(i for i in range(n) if form[i][i] != 0) if any(form[i][i] for i in range(n)) else None
    if v is None:
        # e_0 + e_k with B(e_0, e_k) != 0 is non-isotropic
        k = next(k for k in range(n) if form[0][k] != 0)
        vec = [Fraction(int(i in (0, k))) for i in range(n)]
    else:
        vec = [Fraction(int(i == v)) for i in range(n)]
    bv = [sum(form[i][j] * vec[j] for j in range(n)) for i in range(n)]
    vv = sum(vec[i] * bv[i] for i in range(n))
    # r(x) = x - 2 B(x, v) / B(v, v) v
    return [[Fraction(int(i == j)) - 2 * vec[i] * bv[j] / vv for j in range(n)] for i in range(n)]


def orthogonal_representative(label) -> tuple[list, list]:
    """(X, form): a nilpotent X in so(form) with the Jordan type of a type D label.

    Decoration II is realized by conjugating the I representative with a
    determinant -1 element of O(form); the two are not SO-conjugate but
    have the same centralizer dimension.
    """
    label = parse_label(label) if isinstance(label, str) else label
    if not isinstance(label, OrbitLabel) or label.dynkin_type.family != "D":
        raise InvalidLabelError(f"orthogonal representative needs a type D label, got {label}")
    p = label.partition
    if not is_orthogonal_partition(p):
        raise InvalidLabelError(f"{p} is not an orthogonal partition")
    mult = p.multiplicities()
    blocks = []
    for d in sorted(mult, reverse=True):
        if d % 2:
            blocks += [_odd_block(d)] * mult[d]
        else:
            blocks += [_paired_block(d)] * (mult[d] // 2)
    n = p.total
    X, form, off = _zeros(n), _zeros(n), 0
    for J, B in blocks:
        _place(X, J, off)
        _place(form, B, off)
        off += len(J)
    if label.decoration == "II":
        r = _reflection(form)
        X = _matmul(_matmul(r, X), _inverse(r))
    return X, form


def so_basis(form) -> list[list[list]]:
    """Basis B^{-1}(E_ij - E_ji), i < j, of so(form) = {X : X^T B + B X = 0}."""
    n = len(form)
    binv = _inverse(form)
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            a = _zeros(n)
            a[i][j], a[j][i] = 1, -1
            basis.append(_matmul(binv, a))
    return basis


def in_so(X, form) -> bool:
    lhs = _matmul(_transpose(X), form)
    rhs = _matmul(form, X)
    return all(a + b == 0 for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb))


def _ad(J, X):
    jx, xj = _matmul(J, X), _matmul(X, J)
    return [a - b for ra, rb in zip(jx, xj) for a, b in zip(ra, rb)]


def centralizer_dim(J, form=None) -> int:
    """dim of {X in ambient : JX = XJ}; ambient is gl_n, or so(form) if a form is given."""
    n = len(J)
    if form is None:
        basis = []
        for i in range(n):
            for j in range(n):
                e = _zeros(n)
                e[i][j] = 1
                basis.append(e)
    else:
        if not in_so(J, form):
            raise ValueError("matrix does not lie in the orthogonal algebra of the given form")
        basis = so_basis(form)
    # columns are ad_J of the basis vectors
    columns = [_ad(J, X) for X in basis]
    return len(basis) - rank_exact(_transpose(columns))
