import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilorbit.errors import BudgetError
from nilorbit.oracle import (
    GF,
    FqMatrix,
    batch_jordan_types,
    batch_rank,
    centralizer_dim,
    enumerate_nilpotent,
    field_of_order,
    find_fixed_point,
    in_so,
    jordan_matrix,
    jordan_matrix_fq,
    jordan_type,
    nilpotent_array,
    orthogonal_representative,
    rank_exact,
    standard_frobenius,
    twisted_fixed_space,
    twisted_frobenius_A,
    verify_orbit_stability,
)
from nilorbit.oracle.enumerate import _batch_twisted, _decode
from nilorbit.orbits import Partition, enumerate_orbit_labels, partitions

FIELDS = [GF(2), GF(3), GF(5), GF(7), GF(2, 2), GF(3, 2), GF(5, 2)]


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_field_axioms(F):
    els = [F.element(x) for x in F.elements]
    zero, one = F.element(0), F.element(1)
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        assert a ** F.order == a
        if a:
            assert a * (one / a) == one
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in itertools.product(els, repeat=2):
        assert a * b == b * a and a + b == b + a


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_multiplicative_group_cyclic(F):
    # a field: nonzero elements have no zero divisors and the unit group has an element of order q-1
    assert not any(F.mul[a, b] == 0 for a in range(1, F.order) for b in range(1, F.order))
    orders = []
    for a in range(1, F.order):
        x, k = F.element(a), 1
        while x ** k != F.element(1):
            k += 1
        orders.append(k)
    assert max(orders) == F.order - 1


def test_field_moduli():
    assert GF(2, 2).modulus == (1, 1)
    assert GF(3, 2).modulus == (0, 1)
    w = GF(2, 2).generator()
    assert w * w == w + 1


def test_field_of_order():
    assert field_of_order(4) == GF(2, 2)
    assert field_of_order(7) == GF(7)
    with pytest.raises(ValueError):
        field_of_order(8)
    with pytest.raises(ValueError):
        field_of_order(6)


@pytest.mark.parametrize("n,q,count", [(2, 2, 4), (2, 3, 9), (1, 5, 1), (3, 2, 64), (3, 3, 729)])
def test_nilpotent_counts(n, q, count):
    arr = nilpotent_array(n, q)
    assert len(arr) == count


def test_nilpotent_filter_against_naive_scan():
    F = GF(3)
    naive = []
    for entries in itertools.product(range(3), repeat=4):
        m = np.array(entries, dtype=np.int16).reshape(2, 2)
        sq = np.zeros((2, 2), dtype=int)
        for i, j in itertools.product(range(2), repeat=2):
            sq[i, j] = sum(int(m[i, k]) * int(m[k, j]) for k in range(2)) % 3
        if not sq.any():
            naive.append(m)
    got = nilpotent_array(2, F)
    assert np.array_equal(np.array(naive), got)


def test_enumerate_n1_zero_only():
    assert [m.tolist() for m in enumerate_nilpotent(1, 5)] == [[[0]]]


def test_budget():
    with pytest.raises(BudgetError) as info:
        nilpotent_array(4, 3)
    assert info.value.required == 3**16
    assert len(nilpotent_array(4, 2)) == 2**12
    with pytest.raises(BudgetError):
        nilpotent_array(3, 4, budget=1000)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("NILORBIT_BUDGET", "100")
    with pytest.raises(BudgetError):
        nilpotent_array(2, 4)


def test_parallel_scan_matches_serial():
    from nilorbit.oracle import enumerate as en

    old = en.CHUNK
    en.CHUNK = 4096
    try:
        serial = nilpotent_array(3, 4)
        parallel = nilpotent_array(3, 4, workers=2)
    finally:
        en.CHUNK = old
    assert np.array_equal(serial, parallel)


def test_jordan_type_examples():
    F = GF(3)
    assert jordan_type(jordan_matrix_fq(F, [3])) == Partition([3])
    assert jordan_type(FqMatrix(F, np.zeros((4, 4)))) == Partition([1, 1, 1, 1])
    assert jordan_type(jordan_matrix_fq(F, [2, 2])) == Partition([2, 2])
    with pytest.raises(ValueError):
        jordan_type(FqMatrix(F, np.eye(2)))


@pytest.mark.parametrize("F", [GF(2), GF(3), GF(2, 2)], ids=repr)
def test_batch_rank_against_naive(F):
    # naive rank: size of the row space spanned, counted by brute force
    rng = np.random.default_rng(1)
    mats = rng.integers(0, F.order, size=(40, 3, 3)).astype(np.int16)
    ranks = batch_rank(F, mats)
    for m, r in zip(mats, ranks):
        span = set()
        for coeffs in itertools.product(range(F.order), repeat=3):
            v = np.zeros(3, dtype=np.int16)
            for c, row in zip(coeffs, m):
                v = F.add[v, F.mul[c, row]]
            span.add(v.tobytes())
        assert len(span) == F.order ** int(r)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([GF(2), GF(3), GF(5), GF(2, 2), GF(3, 2)]), st.sampled_from(list(partitions(4))), st.integers(0, 2**32 - 1))
def test_jordan_type_conjugation_invariant(F, part, seed):
    rng = np.random.default_rng(seed)
    J = jordan_matrix_fq(F, part)
    while True:
        P = rng.integers(0, F.order, size=(1, 4, 4)).astype(np.int16)
        if batch_rank(F, P)[0] == 4:
            break
    # conjugate by solving P X = J P for X = P J P^{-1}
    from nilorbit.oracle.enumerate import batch_matmul

    Pinv = _inverse(F, P[0])
    X = batch_matmul(F, batch_matmul(F, P, J.entries[None]), Pinv[None])
    assert batch_jordan_types(F, X)[0] == Partition(part)


def _inverse(F, P):
    n = len(P)
    # Gauss-Jordan on [P | I]
    A = np.concatenate([P, np.eye(n, dtype=np.int16)], axis=1)
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r, col])
        A[[col, piv]] = A[[piv, col]]
        A[col] = F.mul[F.inv[A[col, col]], A[col]]
        for r in range(n):
            if r != col and A[r, col]:
                A[r] = F.sub[A[r], F.mul[A[r, col], A[col]]]
    return A[:, n:]


def test_class_sizes_sum_to_census():
    for n, q in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]:
        report = verify_orbit_stability(n, q)
        assert sum(report.type_counts.values()) == report.nilpotent == q ** (n * (n - 1))
    # n = 2: zero orbit plus the q^2 - 1 regular nilpotents
    assert verify_orbit_stability(2, 5).type_counts == {Partition([2]): 24, Partition([1, 1]): 1}


def test_standard_frobenius_examples():
    F = GF(2, 2)
    M = jordan_matrix_fq(F, [3])
    assert standard_frobenius(M, 2) == M
    w = F.generator()
    D = FqMatrix(F, [[w.value, 0], [0, 0]])
    assert standard_frobenius(D, 2).tolist() == [[(w * w).value, 0], [0, 0]]
    assert (w * w) == w + 1
    B = FqMatrix(GF(3), [[1, 2], [0, 1]])
    assert standard_frobenius(B, 3) == B


def test_twisted_frobenius_examples():
    F = GF(2)
    assert twisted_frobenius_A(FqMatrix(F, np.zeros((3, 3))), 2) == FqMatrix(F, np.zeros((3, 3)))
    assert twisted_frobenius_A(jordan_matrix_fq(F, [2]), 2).tolist() == [[0, 0], [1, 0]]
    F4 = GF(2, 2)
    J = jordan_matrix_fq(F4, [3])
    assert jordan_type(twisted_frobenius_A(J, 2)) == Partition([3])
    F9 = GF(3, 2)
    M = FqMatrix(F9, [[0, 4], [0, 0]])
    assert twisted_frobenius_A(twisted_frobenius_A(M, 3), 3) == M


@pytest.mark.parametrize("n,q,map", [(3, 2, "standard"), (3, 4, "twisted"), (2, 3, "standard"), (3, 4, "standard"), (2, 9, "twisted")])
def test_verify_orbit_stability(n, q, map):
    report = verify_orbit_stability(n, q, map)
    assert report.passed and report.counterexample is None
    assert report.candidates == q ** (n * n)


def test_verify_reports_counterexample(monkeypatch):
    from nilorbit.oracle import enumerate as en

    # a map that kills everything must be caught
    monkeypatch.setitem(en._MAPS, "standard", lambda F, A, q: np.zeros_like(A))
    report = verify_orbit_stability(2, 3, "standard")
    assert not report.passed
    # first nilpotent in row-major index order
    assert report.counterexample == [[0, 0], [1, 0]]


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_fixed_space_matches_brute_force(n, p):
    F = GF(p, 2)
    total = F.order ** (n * n)
    allm = _decode(F, n, 0, total)
    fixed = allm[(_batch_twisted(F, allm, p) == allm).reshape(total, -1).all(axis=1)]
    param = twisted_fixed_space(n, p)
    key = lambda a: sorted(m.tobytes() for m in a)
    assert len(param) == p ** (n * n)
    assert key(param) == key(fixed)


def test_find_fixed_point_examples():
    for part in ([2], [3], [1, 1], [2, 1]):
        M = find_fixed_point(part, 2)
        assert M is not None
        assert twisted_frobenius_A(M, 2) == M
        assert jordan_type(M) == Partition(part)
    assert find_fixed_point([1, 1], 3).tolist() == [[0, 0], [0, 0]]
    with pytest.raises(BudgetError):
        find_fixed_point([4, 3], 3)
    std = find_fixed_point([2, 1], 3, map="standard")
    assert standard_frobenius(std, 3) == std


def test_exact_rank():
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2


def test_centralizer_gl_examples():
    assert centralizer_dim(jordan_matrix([3])) == 3
    assert centralizer_dim(jordan_matrix([1, 1, 1, 1])) == 16
    assert centralizer_dim(jordan_matrix([2, 1])) == 5


@pytest.mark.parametrize("n", range(1, 6))
def test_centralizer_gl_closed_form(n):
    # dim of the GL centralizer is sum of (2i - 1) d_i with d the parts, standard formula
    for p in partitions(n):
        dual = [sum(1 for x in p if x > i) for i in range(p[0])]
        assert centralizer_dim(jordan_matrix(p)) == sum(c * c for c in dual)


def test_orthogonal_representatives_so8():
    for label in enumerate_orbit_labels("D4"):
        X, B = orthogonal_representative(label)
        assert in_so(X, B)
        assert B == [list(r) for r in zip(*B)]
        assert rank_exact(B) == 8
        assert _rational_jordan_type(X) == label.partition


def _rational_jordan_type(X):
    n = len(X)
    ranks, P = [n], [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(n):
        P = [[sum(P[i][k] * X[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        ranks.append(rank_exact(P))
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, n + 1)] + [0]
    parts = []
    for j in range(n, 0, -1):
        parts += [j] * (at_least[j - 1] - at_least[j])
    return Partition(parts)


def test_centralizer_rejects_outside_algebra():
    X, B = orthogonal_representative("D4:[5,3]")
    with pytest.raises(ValueError):
        centralizer_dim(jordan_matrix([2, 2, 2, 1, 1]), B)
