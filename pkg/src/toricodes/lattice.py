"""Lattice point sets and integral convex polygons in Z^2."""

from __future__ import annotations

import json
from math import gcd
from typing import Iterable, Iterator

from .errors import DegeneratePolytope, NotInH, RangeViolation

Point = tuple[int, int]


class PointSet:
    """Immutable, deduplicated set of lattice points in canonical
    (lexicographic) order."""

    __slots__ = ("_points", "_index")

    def __init__(self, points: Iterable[Iterable[int]] = ()):
        pts = sorted({(int(a), int(b)) for a, b in points})
        self._points: tuple[Point, ...] = tuple(pts)
        self._index = {p: i for i, p in enumerate(pts)}

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._index

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def index(self, p) -> int:
        return self._index[tuple(p)]

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({list(self._points)})"

    def __or__(self, other: "PointSet") -> "PointSet":
        return PointSet(self._points + other._points)

    def __sub__(self, other: "PointSet") -> "PointSet":
        return PointSet(p for p in self._points if p not in other)

    def issubset(self, other: "PointSet") -> bool:
        return all(p in other for p in self._points)

    def translate(self, v: Point) -> "PointSet":
        return PointSet((a + v[0], b + v[1]) for a, b in self._points)

    def negate(self) -> "PointSet":
        return opposite(self)

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self._points], separators=(",", ":"))

    def to_list(self) -> list[list[int]]:
        return [list(p) for p in self._points]

    @classmethod
    def from_json(cls, s: str) -> "PointSet":
        return cls(json.loads(s))


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Counterclockwise hull without collinear points, starting at the
    lexicographically smallest vertex (monotone chain)."""
    pts = sorted(set((int(a), int(b)) for a, b in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


class Polytope2:
    """Integral convex polygon, stored as its counterclockwise vertices.

    Segments and single points are accepted; collinear and repeated input
    vertices are collapsed.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Iterable[int]]):
        verts = [(int(a), int(b)) for a, b in vertices]
        if not verts:
            raise DegeneratePolytope("a polytope needs at least one vertex")
        hull = convex_hull(verts)
        if len(hull) >= 3:
            n = len(hull)
            for p in set(verts) - set(hull):
                if not any(_cross(hull[i], hull[(i + 1) % n], p) == 0 for i in range(n)):
                    raise ValueError(f"vertex {p} is interior; {verts} is not in convex position")
        self.vertices: tuple[Point, ...] = tuple(hull)

    def __repr__(self) -> str:
        return f"Polytope2({list(self.vertices)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Polytope2) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def contains(self, pt: Point) -> bool:
        v = self.vertices
        if len(v) == 1:
            return pt == v[0]
        if len(v) == 2:
            a, b = v
            return (_cross(a, b, pt) == 0
                    and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))
        return all(_cross(v[i], v[(i + 1) % len(v)], pt) >= 0 for i in range(len(v)))

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.vertices], separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str) -> "Polytope2":
        return cls(json.loads(s))


def lattice_points(poly: Polytope2) -> PointSet:
    """All integer points inside or on the boundary of ``poly``."""
    if not poly.vertices:
        raise DegeneratePolytope("empty polytope")
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    return PointSet(
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
        if poly.contains((x, y))
    )


def minkowski_sum(A: PointSet, B: PointSet) -> PointSet:
    return PointSet((a[0] + b[0], a[1] + b[1]) for a in A for b in B)


def reduce_mod(U: PointSet, modulus: int) -> PointSet:
    """Reduce both coordinates into ``{0, ..., modulus-1}``."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    return PointSet((a % modulus, b % modulus) for a, b in U)


def opposite(U: PointSet) -> PointSet:
    return PointSet((-a, -b) for a, b in U)


def box(q: int) -> PointSet:
    """H = {0, ..., q-2}^2, the reduced exponent box."""
    return PointSet((a, b) for a in range(q - 1) for b in range(q - 1))


def dual_complement(U: PointSet, q: int) -> PointSet:
    """Exponent set of the dual toric code: H minus the reduction of -U."""
    H = box(q)
    outside = [u for u in U if u not in H]
    if outside:
        raise NotInH(f"points {outside[:5]} lie outside H = {{0..{q - 2}}}^2")
    return H - reduce_mod(opposite(U), q - 1)


def hirzebruch_polytope(d: int, e: int, r: int, q: int | None = None) -> Polytope2:
    """Vertices (0,0), (d,0), (d,e+rd), (0,e)."""
    for name, val in (("d", d), ("e", e), ("r", r)):
        if val < 1:
            raise RangeViolation(f"{name} >= 1 violated: {name}={val}")
    if q is not None:
        if not d < q - 1:
            raise RangeViolation(f"d < q-1 violated: d={d}, q={q}")
        if not e < q - 1:
            raise RangeViolation(f"e < q-1 violated: e={e}, q={q}")
        if not e + r * d < q - 1:
            raise RangeViolation(f"e+rd < q-1 violated: e+rd={e + r * d}, q={q}")
    return Polytope2([(0, 0), (d, 0), (d, e + r * d), (0, e)])


def xab_polytope(a: int, b: int, q: int) -> Polytope2:
    """Vertices (0,0), (a,0), (b,q-2), (0,q-2)."""
    if not 0 <= b:
        raise RangeViolation(f"0 <= b violated: b={b}")
    if not b <= a:
        raise RangeViolation(f"b <= a violated: a={a}, b={b}")
    if not a <= q - 2:
        raise RangeViolation(f"a <= q-2 violated: a={a}, q={q}")
    return Polytope2([(0, 0), (a, 0), (b, q - 2), (0, q - 2)])


def triangle_polytope(a: int) -> Polytope2:
    """Vertices (0,0), (a,0), (0,a)."""
    if a < 0:
        raise RangeViolation(f"a >= 0 violated: a={a}")
    return Polytope2([(0, 0), (a, 0), (0, a)])


def segment_polytope(k: int) -> Polytope2:
    """The 1-D interval [0, k-1] embedded at height 0."""
    if k < 1:
        raise RangeViolation(f"k >= 1 violated: k={k}")
    return Polytope2([(0, 0), (k - 1, 0)])


def xab_count(a: int, b: int, q: int) -> int:
    return ((q - 1) * (a + b + 1) + gcd(a - b, q - 2) + 1) // 2


def hirzebruch_count(d: int, e: int, r: int) -> int:
    return (d + 1) * (e + 1) + r * d * (d + 1) // 2
