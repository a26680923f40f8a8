"""Dense linear algebra over a prime field F_q, plain int lists.

Vectors are lists of ints in [0, q); matrices are lists of row lists. Sizes
here are tiny (dimension = number of conjugacy classes), so clarity and
exactness win over vectorization.
"""

from __future__ import annotations

from .errors import InternalInconsistency


def inverse_mod(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise ZeroDivisionError("inverse of 0")
    return pow(a, q - 2, q)


def mat_vec(A, v, q):
    return [sum(a * b for a, b in zip(row, v)) % q for row in A]


def rref(rows, q):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [[x % q for x in r] for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = inverse_mod(rows[r][c], q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def nullspace(A, q):
    """Basis of the right nullspace, one vector per free column, ascending."""
    R, pivots = rref(A, q)
    ncols = len(A[0])
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-R[i][f]) % q
        out.append(v)
    return out


def det(A, q):
    A = [[x % q for x in row] for row in A]
    n = len(A)
    out = 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            out = -out
        out = out * A[c][c] % q
        inv = inverse_mod(A[c][c], q)
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv % q
                A[i] = [(x - f * y) % q for x, y in zip(A[i], A[c])]
    return out % q


def charpoly(A, q):
    """Characteristic polynomial of A, monic, ascending coefficients.

    Hessenberg reduction by exact similarity transforms, then the standard
    recurrence on leading principal blocks.
    """
    n = len(A)
    H = [[x % q for x in row] for row in A]
    for j in range(n - 2):
        p = next((i for i in range(j + 1, n) if H[i][j]), None)
        if p is None:
            continue
        if p != j + 1:
            H[p], H[j + 1] = H[j + 1], H[p]
            for t in range(n):
                H[t][p], H[t][j + 1] = H[t][j + 1], H[t][p]
        inv = inverse_mod(H[j + 1][j], q)
        for i in range(j + 2, n):
            if H[i][j]:
                f = H[i][j] * inv % q
                Hi, Hj = H[i], H[j + 1]
                for t in range(j, n):
                    Hi[t] = (Hi[t] - f * Hj[t]) % q
                for t in range(n):
                    H[t][j + 1] = (H[t][j + 1] + f * H[t][i]) % q
    polys = [[1]]
    for m in range(1, n + 1):
        d = H[m - 1][m - 1]
        prev = polys[m - 1]
        # (x - d) * prev
        cur = [0] + prev
        for t, coef in enumerate(prev):
            cur[t] = (cur[t] - d * coef) % q
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1] % q
            coef = H[i - 1][m - 1] * prod % q
            if coef:
                pi = polys[i - 1]
                for t, c in enumerate(pi):
                    cur[t] = (cur[t] - coef * c) % q
        cur = [c % q for c in cur]
        polys.append(cur)
    return polys[n]


def poly_eval(p, x, q):
    acc = 0
    for c in reversed(p):
        acc = (acc * x + c) % q
    return acc


def sqrt_mod(a: int, q: int):
    """A square root of a mod prime q, or None; Tonelli-Shanks, deterministic."""
    a %= q
    if a == 0:
        return 0
    if q == 2:
        return a
    if pow(a, (q - 1) // 2, q) != 1:
        return None
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    nonres = next(z for z in range(2, q) if pow(z, (q - 1) // 2, q) == q - 1)
    x = pow(a, (s + 1) // 2, q)
    b = pow(a, s, q)
    g = pow(nonres, s, q)
    r = e
    while True:
        t, m = b, 0
        while t != 1:
            t = t * t % q
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), q)
        g = gs * gs % q
        x = x * gs % q
        b = b * g % q
        r = m


def _express(u, basis, pivots, q):
    # Coordinates of u in an rref basis; exactness is checked.
    coords = [u[p] % q for p in pivots]
    check = [0] * len(u)
    for c, row in zip(coords, basis):
        if c:
            for t, x in enumerate(row):
                check[t] = (check[t] + c * x) % q
    if check != [x % q for x in u]:
        return None
    return coords


def split_common_eigenspaces(mats, n, q):
    """Common one dimensional eigenspaces of a commuting semisimple family.

    Iteratively refines invariant subspaces (held as rref bases) by splitting
    along the eigenspaces of each matrix in order; ``mats`` may be any
    iterable of n by n matrices and is consumed lazily, stopping early once
    every subspace is a line. Raises if any matrix fails to act
    diagonalizably or the final decomposition is not all lines.
    """
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    spaces = [(ident, list(range(n)))]
    for A in mats:
        if all(len(b) == 1 for b, _ in spaces):
            break
        out = []
        for basis, pivots in spaces:
            if len(basis) == 1:
                out.append((basis, pivots))
                continue
            m = len(basis)
            cols = []
            for b in basis:
                u = mat_vec(A, b, q)
                coords = _express(u, basis, pivots, q)
                if coords is None:
                    raise InternalInconsistency("subspace is not invariant")
                cols.append(coords)
            M = [[cols[j][i] for j in range(m)] for i in range(m)]
            cp = charpoly(M, q)
            found = 0
            for lam in range(q):
                if poly_eval(cp, lam, q) != 0:
                    continue
                shifted = [
                    [(M[i][j] - (lam if i == j else 0)) % q for j in range(m)]
                    for i in range(m)
                ]
                vecs = []
                for coeffs in nullspace(shifted, q):
                    v = [0] * n
                    for c, b in zip(coeffs, basis):
                        if c:
                            for t, x in enumerate(b):
                                v[t] = (v[t] + c * x) % q
                    vecs.append(v)
                if vecs:
                    found += len(vecs)
                    out.append(rref(vecs, q))
            if found != m:
                raise InternalInconsistency(
                    "a class sum matrix did not split its block semisimply"
                )
        spaces = out
    for basis, _ in spaces:
        if len(basis) != 1:
            raise InternalInconsistency("common eigenspaces are not one dimensional")
    return [basis[0] for basis, _ in spaces]
