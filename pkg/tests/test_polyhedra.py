import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hivecount import HRepPolytope
from hivecount.errors import InfeasibleLatticeError
from hivecount.linalg import dot, rank as matrix_rank
from hivecount.polyhedra import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    coordinate_bounds,
    dedupe_rows,
    enumerate_vertices,
    interior_point,
    lattice_chart,
    lp,
    lp_standard,
    restrict_chart,
    supporting_cone,
)


def cube_rows(d, lo=0, hi=1):
    rows, rhs = [], []
    for j in range(d):
        row = [0] * d
        row[j] = 1
        rows.append(tuple(row))
        rhs.append(hi)
        row = [0] * d
        row[j] = -1
        rows.append(tuple(row))
        rhs.append(-lo)
    return rows, rhs


def test_lp_maximize_on_square():
    rows, rhs = cube_rows(2)
    res = lp([1, 1], rows, rhs, [], [], maximize=True)
    assert res.status == OPTIMAL
    assert res.value == 2
    assert list(res.x) == [1, 1]


def test_lp_infeasible():
    res = lp([1], [(1,), (-1,)], [0, -1], [], [])
    assert res.status == INFEASIBLE


def test_lp_unbounded():
    res = lp([1], [(-1,)], [0], [], [], maximize=True)
    assert res.status == UNBOUNDED


def test_lp_standard_feasibility():
    # x + y = 1, x, y >= 0, minimize 0
    res = lp_standard([[1, 1]], [1], [0, 0])
    assert res.status == OPTIMAL
    assert sum(res.x) == 1
    res = lp_standard([[1, 1]], [-1], [0, 0])
    assert res.status == INFEASIBLE


def test_lp_with_equalities():
    rows, rhs = cube_rows(2, 0, 3)
    res = lp([1, 0], rows, rhs, [(1, 1)], [4], maximize=True)
    assert res.status == OPTIMAL
    assert res.value == 3
    assert list(res.x) == [3, 1]


def test_interior_point_cube():
    rows, rhs = cube_rows(3)
    t_star, x = interior_point(rows, rhs, 3)
    assert t_star == Fraction(1, 2)
    assert all(dot(r, x) + t_star <= b for r, b in zip(rows, rhs))


def test_interior_point_flat_and_empty():
    # x <= 0, -x <= 0 forces x = 0: max slack 0
    t_star, _ = interior_point([(1,), (-1,)], [0, 0], 1)
    assert t_star == 0
    t_star, _ = interior_point([(1,), (-1,)], [-1, 0], 1)
    assert t_star < 0


def test_coordinate_bounds_box():
    rows, rhs = cube_rows(2, -2, 5)
    assert coordinate_bounds(rows, rhs, 0, 2) == (-2, 5)
    # unbounded above
    assert coordinate_bounds([(-1, 0), (0, 1), (0, -1)], [0, 1, 0], 0, 2)[1] is None


def test_coordinate_bounds_empty():
    assert coordinate_bounds([(1,), (-1,)], [-1, 0], 0, 1) is None


def test_dedupe_rows():
    # (2,0) <= 2 is the same halfplane as (1,0) <= 1; (1,0) <= 0 is tighter
    rows = [(1, 0), (2, 0), (1, 0), (0, 1)]
    rhs = [1, 2, 0, 1]
    drows, drhs = dedupe_rows(rows, rhs)
    assert len(drows) == len(drhs) == 2
    kept = dict(zip(drows, drhs))
    assert kept[(1, 0)] == 0


@given(st.integers(2, 3), st.integers(1, 4))
@settings(max_examples=25, deadline=None)
def test_enumerate_vertices_cube(d, hi):
    rows, rhs = cube_rows(d, 0, hi)
    verts = enumerate_vertices(rows, rhs, d)
    expected = sorted(itertools.product((Fraction(0), Fraction(hi)), repeat=d))
    assert list(verts) == expected


def test_enumerate_vertices_simplex():
    # x, y >= 0, x + y <= 1
    rows = [(-1, 0), (0, -1), (1, 1)]
    rhs = [0, 0, 1]
    verts = enumerate_vertices(rows, rhs, 2)
    assert set(verts) == {(0, 0), (0, 1), (1, 0)}


def test_enumerate_vertices_non_simple():
    # square pyramid apex: octahedron has non-simple structure in 3d slices;
    # use the 3d cross-polytope |x|+|y|+|z| <= 1 whose 6 vertices are simple
    rows = []
    for signs in itertools.product((1, -1), repeat=3):
        rows.append(signs)
    rhs = [1] * 8
    verts = enumerate_vertices(rows, rhs, 3)
    assert len(verts) == 6
    for v in verts:
        assert sum(abs(c) for c in v) == 1


def test_supporting_cone_square_corner():
    rows, rhs = cube_rows(2)
    cone = supporting_cone(rows, rhs, (Fraction(0), Fraction(0)))
    assert cone.apex == (0, 0)
    assert set(cone.rays) == {(1, 0), (0, 1)}


def test_supporting_cone_non_simple_vertex():
    # apex of the pyramid over a square: 4 tight facets at a 3d vertex
    rows = [
        (1, 0, -1),
        (-1, 0, -1),
        (0, 1, -1),
        (0, -1, -1),
        (0, 0, -1),
    ]
    rhs = [0, 0, 0, 0, 0]
    cone = supporting_cone(rows, rhs, (Fraction(0), Fraction(0), Fraction(0)))
    assert len(cone.rays) == 4
    assert matrix_rank([list(r) for r in cone.rays]) == 3


def test_lattice_chart_integral_origin():
    # equalities x + y + z = 3, x - y = 1 with a 1-dim lattice of solutions
    poly = HRepPolytope(
        rows=((-1, 0, 0), (0, -1, 0), (0, 0, -1)),
        rhs=(0, 0, 0),
        eq_rows=((1, 1, 1), (1, -1, 0)),
        eq_rhs=(3, 1),
    )
    chart = lattice_chart(poly)
    assert chart.dim == 1
    assert all(isinstance(v, int) for row in chart.rows for v in row)
    assert all(isinstance(v, int) for v in chart.rhs)
    # chart points map to integral ambient points satisfying the equalities
    amb = chart.to_ambient([0])
    assert sum(amb) == 3 and amb[0] - amb[1] == 1


def test_lattice_chart_infeasible_lattice():
    # 2x = 1 has no integer solutions
    poly = HRepPolytope(rows=((1,),), rhs=(5,), eq_rows=((2,),), eq_rhs=(1,))
    with pytest.raises(InfeasibleLatticeError):
        lattice_chart(poly)


def test_restrict_chart_drops_dimension():
    poly = HRepPolytope(
        rows=((1, 0), (-1, 0), (0, 1), (0, -1)),
        rhs=(2, 0, 2, 0),
        eq_rows=(),
        eq_rhs=(),
    )
    chart = lattice_chart(poly)
    assert chart.dim == 2
    # impose x = 2 (in chart coordinates) as a new equality
    sub = restrict_chart(chart, [(1, 0)], [2])
    assert sub.dim == 1
