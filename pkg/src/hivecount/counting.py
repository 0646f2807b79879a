"""Exact lattice-point counting, naive and via signed unimodular cones.

The naive counter recurses on coordinate bounds and exists as an oracle.  The
production path follows Barvinok: chart away equalities, enumerate vertices,
decompose each tangent cone into signed unimodular half-open cones, and read
the count off the short rational generating functions by specializing along a
generic direction.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, comb, floor

from .errors import (
    CapExceededError,
    CountMismatchError,
    InfeasibleLatticeError,
    UnboundedError,
)
from .hives import build_hive_polytope
from .linalg import adjugate, det, dot, lll_reduce, vec_gcd
from .polyhedra import (
    OPTIMAL,
    HRepPolytope,
    VertexCone,
    coordinate_bounds,
    enumerate_vertices,
    interior_point,
    lattice_chart,
    lp_standard,
    restrict_chart,
    supporting_cone,
)
from .triangulation import placing_triangulation
from .weights import WeightTriple

NAIVE = "naive"
BARVINOK = "barvinok"

NAIVE_DIMENSION_CAP = 12


@dataclass(frozen=True)
class SignedUnimodularCone:
    """Half-open unimodular cone with a sign, one piece of a decomposition.

    open_facets[i] marks the facet spanned by the rays other than i as
    excluded; the convention is fixed by the decomposition's interior
    direction and makes the signed indicator sum exact, not just exact
    modulo lower-dimensional cones.
    """

    sign: int
    apex: tuple
    rays: tuple
    open_facets: tuple


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str


class _DegenerateDirection(Exception):
    """Internal retry signal: chosen direction hit a facet or ray hyperplane."""


def _implicit_rows(chart, x):
    """Indices of rows certified implicit, given a max-min-slack optimum x.

    A nonnegative combination of rows tight at x that sums to the zero
    functional forces every row in its support to hold with equality on the
    whole polytope, and flat optimality guarantees such a combination exists.
    Certificates are mined until none touches the remaining pool; rows the
    pool misses get caught on the next outer round.
    """
    d = chart.dim
    tight = [
        k for k, (a, b) in enumerate(zip(chart.rows, chart.rhs)) if dot(a, x) == b
    ]
    implicit = set()
    pool = set(tight)
    while pool:
        rows_std = [[chart.rows[k][j] for k in tight] for j in range(d)]
        rows_std.append([1 if k in pool else 0 for k in tight])
        rhs_std = [0] * d + [1]
        res = lp_standard(rows_std, rhs_std, [0] * len(tight))
        if res.status != OPTIMAL:
            break
        newly = {k for k, v in zip(tight, res.x) if v > 0 and k in pool}
        if not newly:
            break
        implicit |= newly
        pool -= newly
    return sorted(implicit)


def _reduce(poly: HRepPolytope):
    """Full-dimensional lattice chart of poly, or None when no lattice points.

    Implicit equalities among the inequalities are detected by maximizing the
    minimum slack and migrated into the equality system until the remaining
    inequality system has a strictly interior point.
    """
    try:
        chart = lattice_chart(poly)
        while chart.dim > 0:
            tstar, x = interior_point(chart.rows, chart.rhs, chart.dim)
            if tstar < 0:
                return None
            if tstar > 0:
                return chart
            idx = _implicit_rows(chart, x)
            if not idx:
                raise RuntimeError("flat polytope without an implicit equality")
            chart = restrict_chart(
                chart,
                [list(chart.rows[k]) for k in idx],
                [chart.rhs[k] for k in idx],
            )
        return chart
    except InfeasibleLatticeError:
        return None


def _iter_chart_points(rows, rhs, dim):
    """Integer points of {t : rows t <= rhs} in lexicographic order."""
    if dim == 0:
        if all(b >= 0 for b in rhs):
            yield ()
        return
    bounds = coordinate_bounds(rows, rhs, 0, dim)
    if bounds is None:
        return
    lo, hi = bounds
    if lo is None or hi is None:
        raise UnboundedError("cannot enumerate an unbounded polyhedron")
    sub_rows = [r[1:] for r in rows]
    for v in range(ceil(lo), floor(hi) + 1):
        sub_rhs = [b - r[0] * v for r, b in zip(rows, rhs)]
        for rest in _iter_chart_points(sub_rows, sub_rhs, dim - 1):
            yield (v,) + rest


def iter_lattice_points(poly: HRepPolytope, cap: int = NAIVE_DIMENSION_CAP):
    """Yield the lattice points of poly in ambient coordinates."""
    chart = _reduce(poly)
    if chart is None:
        return
    if chart.dim > cap:
        raise CapExceededError(f"free dimension {chart.dim} exceeds cap {cap}")
    for t in _iter_chart_points(list(chart.rows), list(chart.rhs), chart.dim):
        yield chart.to_ambient(t)


def count_naive(poly: HRepPolytope, cap: int = NAIVE_DIMENSION_CAP) -> CountResult:
    chart = _reduce(poly)
    if chart is None:
        return CountResult(0, NAIVE)
    if chart.dim > cap:
        raise CapExceededError(f"free dimension {chart.dim} exceeds cap {cap}")
    n = sum(1 for _ in _iter_chart_points(list(chart.rows), list(chart.rhs), chart.dim))
    return CountResult(n, NAIVE)


def _interior_direction(rays, attempt, seed):
    """Positive integer combination of the rays; attempt 0 is the plain sum."""
    dim = len(rays[0])
    if attempt == 0:
        return tuple(sum(r[i] for r in rays) for i in range(dim))
    rng = random.Random((seed + 1) * 1_000_003 + attempt)
    weights = [rng.randint(1, 16 + attempt) for _ in rays]
    return tuple(sum(w * r[i] for w, r in zip(weights, rays)) for i in range(dim))


def _short_vector(adj, target):
    """Nonzero lattice vector of the adjugate-column lattice, sup-norm < target.

    LLL usually hands one over directly; if not, widen over small integer
    combinations of the reduced basis.  Existence below the determinant bound
    is guaranteed, so the widening terminates in practice at tiny radii.
    """
    d = len(adj)
    cols = [[adj[i][j] for i in range(d)] for j in range(d)]
    basis = lll_reduce(cols)
    best = None
    for v in basis:
        vec = tuple(v)
        key = (max(abs(c) for c in vec), vec)
        if best is None or key < best:
            best = key
    if best[0] >= target:
        for radius in (1, 2, 3, 4):
            for combo in product(range(-radius, radius + 1), repeat=d):
                if not any(combo):
                    continue
                vec = tuple(
                    sum(cc * bv[i] for cc, bv in zip(combo, basis)) for i in range(d)
                )
                if not any(vec):
                    continue
                key = (max(abs(c) for c in vec), vec)
                if key < best:
                    best = key
            if best[0] < target:
                break
        else:
            raise RuntimeError("short-vector search stalled below the determinant")
    return best[1]


def _barvinok_recurse(sign, rays, y, apex, out):
    d = len(rays)
    U = [[rays[j][i] for j in range(d)] for i in range(d)]
    D = det(U)
    adj = adjugate(U)
    sgn_d = 1 if D > 0 else -1
    checks = [sgn_d * dot(row, y) for row in adj]
    if any(c == 0 for c in checks):
        raise _DegenerateDirection
    if abs(D) == 1:
        out.append(
            SignedUnimodularCone(
                sign, apex, tuple(tuple(r) for r in rays), tuple(c < 0 for c in checks)
            )
        )
        return
    b = _short_vector(adj, abs(D))
    w = []
    for i in range(d):
        num = dot(U[i], b)
        if num % D:
            raise RuntimeError("short vector left the adjugate lattice")
        w.append(num // D)
    g = vec_gcd(w)
    if g > 1:
        w = [v // g for v in w]
        b = tuple(v // g for v in b)
    if all(v * sgn_d <= 0 for v in b):
        b = tuple(-v for v in b)
        w = [-v for v in w]
    w = tuple(w)
    for i in range(d):
        if b[i] == 0:
            continue
        child = list(rays)
        child[i] = w
        child_sign = sign if (b[i] > 0) == (D > 0) else -sign
        _barvinok_recurse(child_sign, tuple(child), y, apex, out)


def decompose_cone(cone: VertexCone, seed: int = 0):
    """Signed half-open unimodular cones whose indicator sum is exactly cone.

    Non-simplicial input is first triangulated by a placing triangulation of
    its rays; the half-open convention along an interior direction removes
    both the triangulation overlaps and the decomposition overcounts.
    """
    rays = cone.rays
    if not rays:
        return [SignedUnimodularCone(1, cone.apex, (), ())]
    d = len(rays[0])
    if len(rays) == d:
        cells = [rays]
    else:
        tri = placing_triangulation(rays)
        cells = [tuple(rays[i] for i in cell.indices) for cell in tri.cells]
    failure = None
    for attempt in range(64):
        y = _interior_direction(rays, attempt, seed)
        out = []
        try:
            for cell in cells:
                _barvinok_recurse(1, cell, y, cone.apex, out)
            return out
        except _DegenerateDirection as exc:
            failure = exc
    raise RuntimeError("no generic interior direction found") from failure


def _series_mul(a, b, deg):
    out = [Fraction(0)] * (deg + 1)
    for i, av in enumerate(a[: deg + 1]):
        if av:
            for j in range(deg + 1 - i):
                if b[j]:
                    out[i + j] += av * b[j]
    return out


def _series_inv(a, deg):
    lead = Fraction(1) / a[0]
    out = [lead] + [Fraction(0)] * deg
    for k in range(1, deg + 1):
        acc = Fraction(0)
        for i in range(1, min(k, len(a) - 1) + 1):
            if a[i]:
                acc += a[i] * out[k - i]
        out[k] = -acc * lead
    return out


def _binomial_series(n, deg):
    """Coefficients of (1+s)^n up to degree deg, n any integer."""
    if n >= 0:
        return [Fraction(comb(n, k)) for k in range(deg + 1)]
    return [Fraction((-1) ** k * comb(-n + k - 1, k)) for k in range(deg + 1)]


def _lowest_lattice_point(leaf):
    """Unique lattice point of the leaf's half-open fundamental cell."""
    d = len(leaf.rays)
    U = [[leaf.rays[j][i] for j in range(d)] for i in range(d)]
    D = det(U)
    adj = adjugate(U)
    point = []
    shifts = []
    for i in range(d):
        s = Fraction(dot(adj[i], leaf.apex), D)
        t = -s - floor(-s)
        if leaf.open_facets[i] and t == 0:
            t = Fraction(1)
        shifts.append(t)
    for j in range(d):
        val = leaf.apex[j] + sum(U[j][i] * shifts[i] for i in range(d))
        if val.denominator != 1:
            raise RuntimeError("lowest point of a unimodular cone is not integral")
        point.append(int(val))
    return tuple(point)


def _leaf_series(leaf, direction, deg):
    """Signed truncated series of the leaf's generating function at (1+s)^direction."""
    d = len(leaf.rays)
    exponent = dot(direction, _lowest_lattice_point(leaf))
    negatives = 0
    denom = [Fraction(1)] + [Fraction(0)] * deg
    for u in leaf.rays:
        e = dot(direction, u)
        if e == 0:
            raise _DegenerateDirection
        if e < 0:
            negatives += 1
            e = -e
            exponent += e
        h = [Fraction(comb(e, k + 1)) for k in range(deg + 1)]
        denom = _series_mul(denom, h, deg)
    series = _series_mul(_binomial_series(exponent, deg), _series_inv(denom, deg), deg)
    sgn = leaf.sign * (-1 if (negatives + d) % 2 else 1)
    return [sgn * v for v in series]


def _specialization_direction(all_rays, dim, seed, attempt):
    if attempt < 50:
        rng = random.Random(((seed + 1) << 20) ^ attempt)
        bound = 8 + 4 * attempt
        cand = tuple(rng.randint(-bound, bound) for _ in range(dim))
    else:
        base = 2 * max(abs(c) for u in all_rays for c in u) + 1
        cand = tuple(base**i for i in range(dim))
    if any(dot(cand, u) == 0 for u in all_rays):
        return None
    return cand


def _assert_bounded(rows, dim):
    """Raise unless {t : rows t <= rhs} is bounded for every right-hand side.

    Boundedness of the polyhedron is trivial recession cone, which is the row
    directions positively spanning the whole space; each +-unit vector is
    tested for membership in their conic hull by a small feasibility LP.
    """
    cols = [[a[j] for a in rows] for j in range(dim)]
    for j in range(dim):
        for sign in (1, -1):
            target = [sign if i == j else 0 for i in range(dim)]
            res = lp_standard(cols, target, [0] * len(rows))
            if res.status != OPTIMAL:
                raise UnboundedError(
                    f"chart coordinate {j} is unbounded; count is infinite"
                )


def count_barvinok(poly: HRepPolytope, seed: int = 0, threads: int = 1) -> CountResult:
    chart = _reduce(poly)
    if chart is None:
        return CountResult(0, BARVINOK)
    d = chart.dim
    if d == 0:
        return CountResult(1, BARVINOK)
    rows = list(chart.rows)
    rhs = list(chart.rhs)
    _assert_bounded(rows, d)
    vertices = enumerate_vertices(rows, rhs, d)

    def leaves_at(v):
        return decompose_cone(supporting_cone(rows, rhs, v), seed)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            groups = list(pool.map(leaves_at, vertices))
    else:
        groups = [leaves_at(v) for v in vertices]
    leaves = [leaf for grp in groups for leaf in grp]
    ray_set = sorted({u for leaf in leaves for u in leaf.rays})
    direction = None
    for attempt in range(60):
        direction = _specialization_direction(ray_set, d, seed, attempt)
        if direction is not None:
            break
    if direction is None:
        raise RuntimeError("no valid specialization direction found")

    def one_leaf(leaf):
        return _leaf_series(leaf, direction, d)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            all_series = list(pool.map(one_leaf, leaves))
    else:
        all_series = [one_leaf(leaf) for leaf in leaves]
    total = [Fraction(0)] * (d + 1)
    for series in all_series:
        for k in range(d + 1):
            total[k] += series[k]
    if any(total[k] != 0 for k in range(d)):
        raise RuntimeError(f"loose Laurent terms in specialization: {total[:d]}")
    value = total[d]
    if value.denominator != 1 or value < 0:
        raise RuntimeError(f"count specialized to {value}, not a nonnegative integer")
    return CountResult(int(value), BARVINOK)


def count_dilation(
    poly: HRepPolytope, n: int, seed: int = 0, threads: int = 1
) -> CountResult:
    """Lattice points of the n-th dilation, counted by scaling right-hand sides."""
    if n < 1:
        raise ValueError("dilation factor must be a positive integer")
    scaled = HRepPolytope(
        rows=poly.rows,
        rhs=tuple(n * b for b in poly.rhs),
        eq_rows=poly.eq_rows,
        eq_rhs=tuple(n * b for b in poly.eq_rhs),
    )
    return CountResult(count_barvinok(scaled, seed=seed, threads=threads).value, BARVINOK)


def hive_hrep(triple: WeightTriple) -> HRepPolytope:
    """The hive polytope of a triple as an H-representation."""
    system = build_hive_polytope(triple)
    return HRepPolytope(
        rows=system.R,
        rhs=(0,) * len(system.R),
        eq_rows=system.B,
        eq_rhs=system.rhs_b,
    )


def lr_coefficient(
    triple: WeightTriple,
    method: str = BARVINOK,
    seed: int = 0,
    threads: int = 1,
    naive_cap: int = NAIVE_DIMENSION_CAP,
) -> int:
    """Tensor-product multiplicity of the triple by lattice-point counting.

    Size-inconsistent triples have coefficient zero and are answered without
    building a polytope.
    """
    a, b, c = triple.sizes
    if c != a + b:
        return 0
    poly = hive_hrep(triple)
    if method == NAIVE:
        return count_naive(poly, cap=naive_cap).value
    if method == BARVINOK:
        return count_barvinok(poly, seed=seed, threads=threads).value
    if method == "both":
        naive = count_naive(poly, cap=naive_cap).value
        barv = count_barvinok(poly, seed=seed, threads=threads).value
        if naive != barv:
            raise CountMismatchError(f"naive={naive} disagrees with barvinok={barv}")
        return barv
    raise ValueError(f"unknown method {method!r}")


def lr_nonzero(triple: WeightTriple) -> bool:
    """Nonvanishing via LP feasibility of the hive system; no counting."""
    a, b, c = triple.sizes
    if c != a + b:
        return False
    try:
        chart = lattice_chart(hive_hrep(triple))
    except InfeasibleLatticeError:
        return False
    tstar, _ = interior_point(chart.rows, chart.rhs, chart.dim)
    return tstar >= 0
