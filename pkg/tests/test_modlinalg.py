"""F_q linear algebra against independent oracles.

charpoly is checked pointwise against determinant evaluation, sqrt_mod
against brute force squaring.
"""

import random

import pytest

from charkit.errors import InternalInconsistency
from charkit.modlinalg import (
    charpoly,
    det,
    inverse_mod,
    mat_vec,
    nullspace,
    poly_eval,
    rref,
    split_common_eigenspaces,
    sqrt_mod,
)


def rand_matrix(rng, n, q):
    return [[rng.randrange(q) for _ in range(n)] for _ in range(n)]


def test_inverse_mod():
    for q in (3, 13, 97):
        for a in range(1, q):
            assert a * inverse_mod(a, q) % q == 1
    with pytest.raises(ZeroDivisionError):
        inverse_mod(0, 7)


def test_rref_shape_and_idempotence():
    rng = random.Random(0)
    for _ in range(30):
        q = rng.choice([5, 13, 101])
        rows = [[rng.randrange(q) for _ in range(6)] for _ in range(4)]
        R, pivots = rref(rows, q)
        assert len(R) == len(pivots)
        for i, c in enumerate(pivots):
            assert R[i][c] == 1
            assert all(R[k][c] == 0 for k in range(len(R)) if k != i)
        R2, p2 = rref(R, q)
        assert R2 == R and p2 == pivots


def test_nullspace_annihilates_and_counts():
    rng = random.Random(1)
    for _ in range(40):
        q = rng.choice([7, 31, 211])
        n = rng.randrange(2, 7)
        A = rand_matrix(rng, n, q)
        ns = nullspace(A, q)
        R, pivots = rref(A, q)
        assert len(ns) == n - len(pivots)
        for v in ns:
            assert mat_vec(A, v, q) == [0] * n


def test_charpoly_matches_det_oracle():
    rng = random.Random(2)
    for _ in range(60):
        q = rng.choice([13, 97, 1009])
        n = rng.randrange(1, 7)
        A = rand_matrix(rng, n, q)
        cp = charpoly(A, q)
        assert len(cp) == n + 1 and cp[-1] == 1
        for _ in range(8):
            x = rng.randrange(q)
            shifted = [
                [(x * (i == j) - A[i][j]) % q for j in range(n)] for i in range(n)
            ]
            assert poly_eval(cp, x, q) == det(shifted, q)


def test_charpoly_diagonal():
    q = 101
    d = [3, 7, 7, 90]
    A = [[d[i] if i == j else 0 for j in range(4)] for i in range(4)]
    cp = charpoly(A, q)
    for x in range(q):
        expected = 1
        for v in d:
            expected = expected * (x - v) % q
        assert poly_eval(cp, x, q) == expected


def test_det_multiplicative():
    rng = random.Random(3)
    q = 97
    for _ in range(20):
        A, B = rand_matrix(rng, 4, q), rand_matrix(rng, 4, q)
        AB = [
            [sum(A[i][k] * B[k][j] for k in range(4)) % q for j in range(4)]
            for i in range(4)
        ]
        assert det(AB, q) == det(A, q) * det(B, q) % q


def test_sqrt_mod_brute():
    for q in (3, 5, 13, 17, 41, 97, 1013):
        squares = {x * x % q for x in range(q)}
        for a in range(q):
            r = sqrt_mod(a, q)
            if a in squares:
                assert r is not None and r * r % q == a
            else:
                assert r is None


def conjugated_family(rng, diags, q):
    """Commuting family P diag P^-1 with a shared random P."""
    n = len(diags[0])
    while True:
        P = rand_matrix(rng, n, q)
        if det(P, q) != 0:
            break
    # invert P by rref of [P | I]
    aug = [P[i] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    R, pivots = rref(aug, q)
    Pinv = [row[n:] for row in R]
    out = []
    for d in diags:
        D = [[d[i] if i == j else 0 for j in range(n)] for i in range(n)]
        PD = [
            [sum(P[i][k] * D[k][j] for k in range(n)) % q for j in range(n)]
            for i in range(n)
        ]
        out.append(
            [
                [sum(PD[i][k] * Pinv[k][j] for k in range(n)) % q for j in range(n)]
                for i in range(n)
            ]
        )
    return out, P


def test_split_common_eigenspaces_recovers_lines():
    rng = random.Random(5)
    q = 101
    # jointly separating diagonals, though no single one separates
    diags = [[3, 3, 5, 7], [2, 4, 4, 4], [1, 1, 1, 9]]
    mats, P = conjugated_family(rng, diags, q)
    lines = split_common_eigenspaces(mats, 4, q)
    assert len(lines) == 4
    # each line is a simultaneous eigenvector of every matrix
    for v in lines:
        for A in mats:
            u = mat_vec(A, v, q)
            k = next(i for i, x in enumerate(v) if x)
            lam = u[k] * inverse_mod(v[k], q) % q
            assert u == [lam * x % q for x in v]
    # and spans: rref of the collected lines is the identity
    R, pivots = rref(lines, q)
    assert pivots == [0, 1, 2, 3]


def test_split_rejects_nondiagonalizable():
    q = 7
    jordan = [[1, 1], [0, 1]]
    with pytest.raises(InternalInconsistency):
        split_common_eigenspaces([jordan], 2, q)


def test_split_single_matrix_distinct_eigenvalues():
    q = 13
    A = [[2, 0, 0], [0, 5, 0], [0, 0, 11]]
    lines = split_common_eigenspaces([A], 3, q)
    assert sorted(tuple(v) for v in lines) == [
        (0, 0, 1),
        (0, 1, 0),
        (1, 0, 0),
    ]
