"""Rational polyhedra: exact LP, lattice charts, vertices, and tangent cones.

All arithmetic is done with Fraction or int; nothing here is approximate.
Inequality systems are stored as (rows, rhs) meaning rows @ x <= rhs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import InfeasibleLatticeError
from .linalg import dot, hermite_solve, kernel_line, primitive, vec_gcd

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: Fraction | None = None


def _pivot(tab, obj, basis, r, c):
    inv = 1 / tab[r][c]
    tab[r] = [v * inv for v in tab[r]]
    row_r = tab[r]
    for i in range(len(tab)):
        if i != r and tab[i][c]:
            f = tab[i][c]
            tab[i] = [v - f * w for v, w in zip(tab[i], row_r)]
    if obj[c]:
        f = obj[c]
        obj[:] = [v - f * w for v, w in zip(obj, row_r)]
    basis[r] = c


def _bland_min(tab, obj, basis, ncols):
    """Run simplex pivots (Bland's rule) until optimal or unbounded."""
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(len(tab)):
            coef = tab[i][enter]
            if coef > 0:
                key = (tab[i][-1] / coef, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        _pivot(tab, obj, basis, best[1], enter)


def _standard_simplex(rows, rhs, cost):
    """Minimize cost . z over {z >= 0 : rows z = rhs}; returns (status, z)."""
    m = len(rows)
    n = len(cost)
    tab = []
    for row, b in zip(rows, rhs):
        if b < 0:
            row, b = [-v for v in row], -b
        tab.append([Fraction(v) for v in row] + [Fraction(0)] * m + [Fraction(b)])
    for i in range(m):
        tab[i][n + i] = Fraction(1)
    basis = list(range(n, n + m))
    obj = [Fraction(1) if j >= n else Fraction(0) for j in range(n + m)] + [Fraction(0)]
    for row in tab:
        obj = [a - b for a, b in zip(obj, row)]
    _bland_min(tab, obj, basis, n + m)
    if -obj[-1] > 0:
        return INFEASIBLE, None
    for r in range(m):
        if basis[r] >= n:
            c = next((j for j in range(n) if tab[r][j] != 0), None)
            if c is not None:
                _pivot(tab, obj, basis, r, c)
    keep = [r for r in range(m) if basis[r] < n]
    tab = [tab[r][:n] + [tab[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]
    obj = [Fraction(c) for c in cost] + [Fraction(0)]
    for r, b in enumerate(basis):
        if obj[b]:
            f = obj[b]
            obj = [v - f * w for v, w in zip(obj, tab[r])]
    status = _bland_min(tab, obj, basis, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None
    z = [Fraction(0)] * n
    for r, b in enumerate(basis):
        z[b] = tab[r][-1]
    return OPTIMAL, z


def lp_standard(rows, rhs, cost):
    """Minimize cost . z over {z >= 0 : rows z = rhs}.

    Returns an LPResult whose x is the full nonnegative solution vector.
    """
    status, z = _standard_simplex([list(r) for r in rows], list(rhs), list(cost))
    if status != OPTIMAL:
        return LPResult(status)
    value = sum(Fraction(c) * v for c, v in zip(cost, z))
    return LPResult(OPTIMAL, tuple(z), value)


def lp(c, rows, rhs, eq_rows=(), eq_rhs=(), maximize=True):
    """Exact LP over free variables x: optimize c . x s.t. rows x <= rhs, eq_rows x = eq_rhs."""
    d = len(c)
    if d == 0:
        ok = all(b >= 0 for b in rhs) and all(b == 0 for b in eq_rhs)
        return LPResult(OPTIMAL, (), Fraction(0)) if ok else LPResult(INFEASIBLE)
    m1 = len(rows)
    sign = -1 if maximize else 1
    cost = [sign * Fraction(v) for v in c] + [-sign * Fraction(v) for v in c] + [Fraction(0)] * m1
    std_rows = []
    std_rhs = []
    for i, (a, b) in enumerate(zip(rows, rhs)):
        slack = [0] * m1
        slack[i] = 1
        std_rows.append(list(a) + [-v for v in a] + slack)
        std_rhs.append(b)
    for a, b in zip(eq_rows, eq_rhs):
        std_rows.append(list(a) + [-v for v in a] + [0] * m1)
        std_rhs.append(b)
    status, z = _standard_simplex(std_rows, std_rhs, cost)
    if status != OPTIMAL:
        return LPResult(status)
    x = tuple(z[j] - z[d + j] for j in range(d))
    return LPResult(OPTIMAL, x, sum(Fraction(v) * xi for v, xi in zip(c, x)))


def interior_point(rows, rhs, dim):
    """Maximize the minimum slack of rows x <= rhs.

    Returns (t, x) where t is the best achievable minimum slack (capped at 1)
    and x attains it.  t < 0 means the system is infeasible, t == 0 means it
    is feasible but has empty interior, t > 0 gives a relative interior point
    of a full-dimensional system.
    """
    if not rows:
        return Fraction(1), tuple(Fraction(0) for _ in range(dim))
    aug_rows = [list(a) + [1] for a in rows] + [[0] * dim + [1]]
    aug_rhs = list(rhs) + [1]
    c = [0] * dim + [1]
    res = lp(c, aug_rows, aug_rhs)
    if res.status != OPTIMAL:
        raise RuntimeError("slack program cannot be infeasible or unbounded")
    return res.value, res.x[:dim]


def coordinate_bounds(rows, rhs, j, dim):
    """Range of coordinate j over {x : rows x <= rhs}.

    Returns None for an empty polyhedron, otherwise (lower, upper) where a
    None endpoint marks unboundedness on that side.
    """
    c = [0] * dim
    c[j] = 1
    hi = lp(c, rows, rhs, maximize=True)
    if hi.status == INFEASIBLE:
        return None
    lo = lp(c, rows, rhs, maximize=False)
    return (
        None if lo.status == UNBOUNDED else lo.value,
        None if hi.status == UNBOUNDED else hi.value,
    )


@dataclass(frozen=True)
class HRepPolytope:
    """A x <= b together with optional equalities C x = d, all integer data."""

    rows: tuple
    rhs: tuple
    eq_rows: tuple = ()
    eq_rhs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        object.__setattr__(self, "eq_rows", tuple(tuple(r) for r in self.eq_rows))
        object.__setattr__(self, "eq_rhs", tuple(self.eq_rhs))

    @property
    def dim(self) -> int:
        if self.rows:
            return len(self.rows[0])
        if self.eq_rows:
            return len(self.eq_rows[0])
        return 0


@dataclass(frozen=True)
class LatticeChart:
    """Bijective affine chart t -> origin + basis t from Z^k onto Z^n cap {eqs}.

    rows/rhs carry the inequality system rewritten in chart coordinates, with
    constant rows already removed.
    """

    origin: tuple
    basis: tuple
    rows: tuple
    rhs: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.origin)

    def to_ambient(self, t):
        return tuple(
            o + sum(bv[i] * tv for bv, tv in zip(self.basis, t))
            for i, o in enumerate(self.origin)
        )


def _rewrite_rows(rows, rhs, origin, basis):
    """Push a x <= b through x = origin + basis t; drops satisfied constant rows."""
    out_rows = []
    out_rhs = []
    for a, b in zip(rows, rhs):
        new_row = tuple(dot(a, bv) for bv in basis)
        new_rhs = b - dot(a, origin)
        if any(new_row):
            out_rows.append(new_row)
            out_rhs.append(new_rhs)
        elif new_rhs < 0:
            raise InfeasibleLatticeError(
                f"inequality reduces to 0 <= {new_rhs} on the equality locus"
            )
    return out_rows, out_rhs


def dedupe_rows(rows, rhs):
    """Keep only the tightest representative of each parallel inequality class."""
    best = {}
    for a, b in zip(rows, rhs):
        key = primitive(a)
        g = vec_gcd(a)
        cur = best.get(key)
        if cur is None or Fraction(b, g) < Fraction(cur[1], vec_gcd(cur[0])):
            best[key] = (tuple(a), b)
    kept = list(best.values())
    return [a for a, _ in kept], [b for _, b in kept]


def lattice_chart(poly: HRepPolytope) -> LatticeChart:
    """Solve away the equalities of poly over the integers.

    Raises InfeasibleLatticeError when the equality system has no integral
    solution or an inequality reduces to an impossible constant.
    """
    n = poly.dim
    if poly.eq_rows:
        x0, kernel = hermite_solve([list(r) for r in poly.eq_rows], list(poly.eq_rhs))
    else:
        x0 = [0] * n
        kernel = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows, rhs = _rewrite_rows(poly.rows, poly.rhs, x0, kernel)
    rows, rhs = dedupe_rows(rows, rhs)
    return LatticeChart(tuple(x0), tuple(tuple(k) for k in kernel), tuple(rows), tuple(rhs))


def restrict_chart(chart: LatticeChart, eq_rows, eq_rhs) -> LatticeChart:
    """Impose further integral equalities (in chart coordinates) on a chart."""
    t0, kernel = hermite_solve([list(r) for r in eq_rows], list(eq_rhs))
    origin = chart.to_ambient(t0)
    basis = tuple(
        tuple(sum(bv[i] * kv for bv, kv in zip(chart.basis, k)) for i in range(chart.ambient_dim))
        for k in kernel
    )
    rows, rhs = _rewrite_rows(chart.rows, chart.rhs, t0, kernel)
    rows, rhs = dedupe_rows(rows, rhs)
    return LatticeChart(origin, basis, tuple(rows), tuple(rhs))


def enumerate_vertices(rows, rhs, dim):
    """All vertices of {x : rows x <= rhs} by depth-first search over row subsets.

    Takes every maximal-rank subset of dim rows, solving the pinned equality
    system by incremental fraction-free elimination, and keeps the solutions
    that satisfy the whole system.  The polyhedron need not be bounded; what
    comes back is its set of extreme points, as tuples of Fraction.
    """
    n = len(rows)
    if dim == 0:
        ok = all(b >= 0 for b in rhs)
        return [()] if ok else []
    verts = {}
    echelon = []  # (pivot column, reduced integer row, reduced rhs)

    def reduce_row(a, b):
        a = list(a)
        for pc, er, eb in echelon:
            if a[pc]:
                p, q = er[pc], a[pc]
                a = [p * x - q * y for x, y in zip(a, er)]
                b = p * b - q * eb
                g = vec_gcd(a + [b])
                if g > 1:
                    a = [x // g for x in a]
                    b = b // g
        return a, b

    def solve_leaf():
        x = [Fraction(0)] * dim
        for pc, er, eb in reversed(echelon):
            acc = Fraction(eb)
            for j in range(dim):
                if j != pc and er[j]:
                    acc -= er[j] * x[j]
            x[pc] = acc / er[pc]
        denom = lcm(*(xi.denominator for xi in x))
        y = [int(xi * denom) for xi in x]
        for a, b in zip(rows, rhs):
            if dot(a, y) > b * denom:
                return
        verts.setdefault(tuple(x), None)

    def dfs(i, need):
        if need == 0:
            solve_leaf()
            return
        if n - i < need:
            return
        a, b = reduce_row(rows[i], rhs[i])
        if any(a):
            pc = next(j for j in range(dim) if a[j])
            echelon.append((pc, a, b))
            dfs(i + 1, need - 1)
            echelon.pop()
        dfs(i + 1, need)

    dfs(0, dim)
    return sorted(verts)


@dataclass(frozen=True)
class VertexCone:
    """Tangent cone of a polytope at a vertex: apex + primitive extreme rays."""

    apex: tuple
    rays: tuple


def supporting_cone(rows, rhs, vertex) -> VertexCone:
    """Tangent cone at a vertex of a full-dimensional {x : rows x <= rhs}."""
    dim = len(vertex)
    if dim == 0:
        return VertexCone((), ())
    denom = lcm(*(Fraction(v).denominator for v in vertex))
    vy = [int(Fraction(v) * denom) for v in vertex]
    tight = [tuple(a) for a, b in zip(rows, rhs) if dot(a, vy) == b * denom]
    if dim == 1:
        rays = {
            cand
            for cand in ((1,), (-1,))
            if all(dot(a, cand) <= 0 for a in tight)
        }
        return VertexCone(tuple(Fraction(v) for v in vertex), tuple(sorted(rays)))
    rays = {}
    for subset in combinations(range(len(tight)), dim - 1):
        sub = [list(tight[i]) for i in subset]
        u = kernel_line(sub)
        if u is None:
            continue
        for cand in (u, tuple(-v for v in u)):
            if all(dot(a, cand) <= 0 for a in tight):
                rays.setdefault(cand, None)
                break
    return VertexCone(tuple(Fraction(v) for v in vertex), tuple(sorted(rays)))
