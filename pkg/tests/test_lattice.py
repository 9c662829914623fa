from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from oracles import hirzebruch_points_by_inequalities, xab_points_by_inequalities
from toricodes.errors import DegeneratePolytope, NotInH, RangeViolation
from toricodes.lattice import (
    PointSet, Polytope2, box, convex_hull, dual_complement, hirzebruch_count, hirzebruch_polytope,
    lattice_points, minkowski_sum, opposite, reduce_mod, segment_polytope, triangle_polytope,
    xab_count, xab_polytope,
)

points = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
point_sets = st.lists(points, max_size=8).map(PointSet)


def test_triangle_count():
    assert len(lattice_points(triangle_polytope(2))) == 6


def test_xab_example():
    P = xab_polytope(2, 1, 5)
    assert P.vertices == ((0, 0), (2, 0), (1, 3), (0, 3))
    U = lattice_points(P)
    assert len(U) == 9 == xab_count(2, 1, 5)
    assert list(U) == xab_points_by_inequalities(2, 1, 5)


def test_hirzebruch_example():
    P = hirzebruch_polytope(1, 1, 1)
    assert P.vertices == ((0, 0), (1, 0), (1, 2), (0, 1))
    assert len(lattice_points(P)) == 5 == hirzebruch_count(1, 1, 1)


def test_range_violations():
    with pytest.raises(RangeViolation):
        xab_polytope(3, 4, 5)
    with pytest.raises(RangeViolation):
        xab_polytope(4, 0, 5)
    with pytest.raises(RangeViolation):
        hirzebruch_polytope(0, 1, 1)
    with pytest.raises(RangeViolation):
        hirzebruch_polytope(1, 2, 2, q=5)
    with pytest.raises(RangeViolation):
        triangle_polytope(-1)
    with pytest.raises(RangeViolation):
        segment_polytope(0)


def test_degenerate_polytopes():
    assert list(lattice_points(segment_polytope(3))) == [(0, 0), (1, 0), (2, 0)]
    assert list(lattice_points(Polytope2([(2, 5)]))) == [(2, 5)]
    assert list(lattice_points(triangle_polytope(0))) == [(0, 0)]
    with pytest.raises(DegeneratePolytope):
        Polytope2([])


def test_interior_vertices_dropped():
    P = Polytope2([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert P.vertices == ((0, 0), (2, 0), (0, 2))
    with pytest.raises(ValueError):
        Polytope2([(0, 0), (3, 0), (0, 3), (1, 1)])


def test_minkowski_examples():
    A = PointSet([(0, 0), (1, 0)])
    assert minkowski_sum(A, A) == PointSet([(0, 0), (1, 0), (2, 0)])
    U = lattice_points(xab_polytope(2, 1, 5))
    assert minkowski_sum(U, PointSet([(0, 0)])) == U
    pairwise = {(a[0] + b[0], a[1] + b[1]) for a in U for b in U}
    assert set(minkowski_sum(U, U)) == pairwise


def test_reduce_mod_examples():
    assert reduce_mod(PointSet([(5, 3)]), 4) == PointSet([(1, 3)])
    assert reduce_mod(PointSet([(0, 0), (4, 0)]), 4) == PointSet([(0, 0)])
    with pytest.raises(ValueError):
        reduce_mod(PointSet([(0, 0)]), 0)


def test_sum_of_xab_reduces_to_hull():
    # the hull has one point, (4, 0), outside the box; both sides agree after reduction
    U = lattice_points(xab_polytope(2, 1, 5))
    hull = lattice_points(Polytope2([(0, 0), (4, 0), (3, 3), (0, 3)]))
    assert len(hull) == 17
    assert reduce_mod(minkowski_sum(U, U), 4) == reduce_mod(hull, 4) == box(5)


def test_dual_complement_examples():
    assert dual_complement(PointSet([(0, 0)]), 3) == PointSet([(0, 1), (1, 0), (1, 1)])
    assert len(dual_complement(lattice_points(xab_polytope(2, 1, 5)), 5)) == 7
    assert len(dual_complement(box(3), 3)) == 0
    with pytest.raises(NotInH):
        dual_complement(PointSet([(3, 0)]), 4)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_xab_counts_exhaustive(q):
    for a in range(q - 1):
        for b in range(a + 1):
            U = lattice_points(xab_polytope(a, b, q))
            assert list(U) == xab_points_by_inequalities(a, b, q)
            assert len(U) == ((q - 1) * (a + b + 1) + gcd(a - b, q - 2) + 1) // 2


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_hirzebruch_counts_exhaustive(q):
    for d in range(1, q - 1):
        for e in range(1, q - 1):
            for r in range(1, q):
                if e + r * d >= q - 1:
                    continue
                U = lattice_points(hirzebruch_polytope(d, e, r, q))
                assert list(U) == hirzebruch_points_by_inequalities(d, e, r)
                assert len(U) == (d + 1) * (e + 1) + r * d * (d + 1) // 2


def test_pointset_canonical_order_and_json():
    U = PointSet([(2, 1), (0, 3), (2, 1), (-1, 0)])
    assert list(U) == [(-1, 0), (0, 3), (2, 1)]
    assert U.to_json() == "[[-1,0],[0,3],[2,1]]"
    assert PointSet.from_json(U.to_json()) == U
    assert U.index((0, 3)) == 1 and (2, 1) in U


def test_polytope_json():
    P = xab_polytope(3, 1, 7)
    assert Polytope2.from_json(P.to_json()) == P


@given(point_sets, st.integers(1, 9))
def test_reduce_mod_idempotent(U, m):
    R = reduce_mod(U, m)
    assert reduce_mod(R, m) == R
    assert all(0 <= a < m and 0 <= b < m for a, b in R)


@given(point_sets, point_sets, point_sets)
def test_minkowski_commutative_associative(A, B, C):
    assert minkowski_sum(A, B) == minkowski_sum(B, A)
    assert minkowski_sum(minkowski_sum(A, B), C) == minkowski_sum(A, minkowski_sum(B, C))


@given(st.sampled_from([3, 4, 5, 7]), st.data())
def test_dual_complement_sizes(q, data):
    H = list(box(q))
    U = PointSet(data.draw(st.lists(st.sampled_from(H), max_size=len(H))))
    D = dual_complement(U, q)
    assert len(D) + len(U) == (q - 1) ** 2
    assert not set(D) & set(reduce_mod(opposite(U), q - 1))


@given(point_sets)
def test_opposite_involution(U):
    assert opposite(opposite(U)) == U
    assert U.translate((3, -2)).translate((-3, 2)) == U


@given(st.lists(points, min_size=1, max_size=8))
def test_hull_contains_generators(pts):
    P = Polytope2(convex_hull(pts))
    inside = lattice_points(P)
    assert all(tuple(p) in inside for p in pts)
    assert all(P.contains(v) for v in P.vertices)
