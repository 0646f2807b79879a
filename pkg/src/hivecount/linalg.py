"""Exact linear algebra over the integers and rationals, on plain lists.

Everything here is deterministic and division-free where possible: Bareiss
elimination for determinants and ranks, column-style Hermite reduction for
integral solves and kernel bases, Gaussian elimination over Fraction for
rational solves, and a small LLL reduction used by the cone decomposition.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InfeasibleLatticeError


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(rows, x):
    return [dot(r, x) for r in rows]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v) -> tuple[int, ...]:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)


def det(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(rows) -> int:
    """Rank of an integer matrix via fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n_rows):
            if m[i][col] != 0:
                p, q = m[r][col], m[i][col]
                m[i] = [p * b - q * a for a, b in zip(m[r], m[i])]
                g = vec_gcd(m[i])
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        r += 1
        if r == n_rows:
            break
    return r


def minor(rows, drop_i, drop_j):
    return [
        [v for j, v in enumerate(row) if j != drop_j]
        for i, row in enumerate(rows)
        if i != drop_i
    ]


def adjugate(rows):
    """Classical adjugate: adjugate(A) @ A = det(A) * I."""
    n = len(rows)
    if n == 0:
        return []
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(minor(rows, i, j))
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return adj


def solve_square(rows, b):
    """Solve A x = b exactly for square A; None when A is singular."""
    n = len(rows)
    m = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(rows, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return None
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [v * inv for v in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [v - f * w for v, w in zip(m[i], m[k])]
    return [m[i][n] for i in range(n)]


def solve_affine(rows, b):
    """Rational solution set of A x = b: (particular, kernel basis) or None.

    The kernel basis spans the rational nullspace; it is not adjusted to any
    lattice (see hermite_solve for the integral version).
    """
    if not rows:
        raise ValueError("need at least ambient dimension; pass rows=[[0]*d] instead")
    n_cols = len(rows[0])
    m = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(rows, b)]
    pivots = []
    r = 0
    for col in range(n_cols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][n_cols] != 0:
            return None
    particular = [Fraction(0)] * n_cols
    for row_i, col in enumerate(pivots):
        particular[col] = m[row_i][n_cols]
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for row_i, col in enumerate(pivots):
            v[col] = -m[row_i][fc]
        basis.append(v)
    return particular, basis


def hermite_solve(rows, b):
    """Integral solution of A x = b: (x0, kernel basis columns).

    Column operations tracked in a unimodular U give A U = H with H in column
    echelon form; back substitution in H either produces an integral solution
    or proves none exists.  The returned kernel vectors form a lattice basis
    of the integral nullspace of A.  Raises InfeasibleLatticeError when the
    system has no integral solution (including rational infeasibility).
    """
    n_rows = len(rows)
    if n_rows == 0:
        raise ValueError("pass explicit ambient dimension via a zero row")
    n_cols = len(rows[0])
    # Work with columns as first-class vectors.
    W = [[rows[i][c] for i in range(n_rows)] for c in range(n_cols)]
    U = [[1 if i == c else 0 for i in range(n_cols)] for c in range(n_cols)]
    col_start = 0
    pivots = []  # (row, column position)
    for row_i in range(n_rows):
        active = [c for c in range(col_start, n_cols) if W[c][row_i] != 0]
        while len(active) > 1:
            active.sort(key=lambda c: abs(W[c][row_i]))
            base = active[0]
            pv = W[base][row_i]
            nxt = []
            for c in active[1:]:
                q = W[c][row_i] // pv
                if q:
                    W[c] = [a - q * bb for a, bb in zip(W[c], W[base])]
                    U[c] = [a - q * bb for a, bb in zip(U[c], U[base])]
                if W[c][row_i] != 0:
                    nxt.append(c)
            active = [base] + nxt
        if not active:
            continue
        c = active[0]
        if W[c][row_i] < 0:
            W[c] = [-v for v in W[c]]
            U[c] = [-v for v in U[c]]
        if c != col_start:
            W[c], W[col_start] = W[col_start], W[c]
            U[c], U[col_start] = U[col_start], U[c]
        pivots.append((row_i, col_start))
        col_start += 1
    # Solve H y = b over the pivot columns.
    y = [0] * n_cols
    pivot_rows = {row_i: cpos for row_i, cpos in pivots}
    for row_i in range(n_rows):
        residual = b[row_i] - sum(W[c][row_i] * y[c] for _, c in pivots if W[c][row_i])
        if row_i in pivot_rows:
            c = pivot_rows[row_i]
            pv = W[c][row_i]
            # W[c][row_i'] = 0 for every earlier pivot or skipped row, so the
            # residual here involves only already-determined y values.
            if residual % pv != 0:
                raise InfeasibleLatticeError(
                    f"row {row_i}: {pv} does not divide residual {residual}"
                )
            y[c] = residual // pv
        elif residual != 0:
            raise InfeasibleLatticeError(f"row {row_i}: inconsistent residual {residual}")
    x0 = [sum(U[c][i] * y[c] for c in range(n_cols) if y[c]) for i in range(n_cols)]
    kernel = [list(U[c]) for c in range(col_start, n_cols)]
    return x0, kernel


def integer_kernel(rows):
    """Lattice basis of the integral nullspace {x : A x = 0}."""
    n_rows = len(rows)
    x0, kernel = hermite_solve(rows, [0] * n_rows)
    return kernel


def kernel_line(rows):
    """Primitive integer kernel vector of rows with corank exactly one, else None."""
    dim = len(rows[0])
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(dim):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col]:
                p, q = m[r][col], m[i][col]
                m[i] = [p * x - q * y for x, y in zip(m[i], m[r])]
                g = vec_gcd(m[i])
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        pivots.append(col)
        r += 1
    if r != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    u = [Fraction(0)] * dim
    u[free] = Fraction(1)
    for row_i, col in enumerate(pivots):
        u[col] = Fraction(-m[row_i][free], m[row_i][col])
    denom = 1
    for v in u:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    return primitive(tuple(int(v * denom) for v in u))


def lll_reduce(basis, delta=Fraction(3, 4)):
    """Lenstra-Lenstra-Lovasz reduction of linearly independent integer rows."""
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def gram_schmidt():
        ortho = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    raise ValueError("LLL input rows are dependent")
                mu[i][j] = Fraction(dot(b[i], ortho[j])) / norms[j]
                v = [a - mu[i][j] * c for a, c in zip(v, ortho[j])]
            ortho.append(v)
            norms.append(dot(v, v))
        return ortho, mu, norms

    ortho, mu, norms = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [a - q * c for a, c in zip(b[k], b[j])]
                ortho, mu, norms = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            ortho, mu, norms = gram_schmidt()
            k = max(k - 1, 1)
    return b
