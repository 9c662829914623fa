"""Toric evaluation codes.

Torus points are indexed by exponent pairs ``(i, j)`` standing for
``P_ij = (xi**i, xi**j)``; columns follow lexicographic ``(i, j)`` order.
A monomial ``X**m`` evaluates at ``P_ij`` to ``xi**(i*m1 + j*m2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import linalg
from .errors import EmptyExponentSet, LengthMismatch, UnsupportedSupport
from .gf import Field
from .lattice import Point, PointSet, dual_complement, reduce_mod


def torus_points(q: int) -> list[Point]:
    return [(i, j) for i in range(q - 1) for j in range(q - 1)]


def eval_monomial(field: Field, m: Sequence[int], P: Sequence[int]) -> int:
    """Value of ``X**m`` at the torus point with exponent pair ``P``."""
    return field.xi_pow(P[0] * m[0] + P[1] * m[1])


def evaluation_matrix(field: Field, exponents: Iterable[Point], points: Sequence[Point]) -> np.ndarray:
    E = np.array(list(exponents), dtype=np.int64).reshape(-1, 2)
    P = np.array(list(points), dtype=np.int64).reshape(-1, 2)
    logs = (E @ P.T) % (field.q - 1)
    return field.exp_table[logs]


@dataclass(frozen=True, eq=False)
class ToricCode:
    """Generator matrix ``G`` (row per exponent, column per support point)."""

    field: Field
    exponents: PointSet
    support: tuple[Point, ...]
    G: np.ndarray

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def full_support(self) -> bool:
        return self.support == tuple(torus_points(self.q))

    def column(self, point: Point) -> int:
        return self.support.index(tuple(point))

    def restrict(self, points: Iterable[Point]) -> "ToricCode":
        """The same code punctured to ``points`` (kept in the given order)."""
        pts = tuple(tuple(p) for p in points)
        idx = [self.column(p) for p in pts]
        G = self.G[:, idx]
        G.flags.writeable = False
        return ToricCode(self.field, self.exponents, pts, G)

    def rs_view(self) -> "ToricCode":
        """Columns with ``j = 0``: the genuine length q-1 code of a 1-D
        exponent set."""
        return self.restrict(p for p in self.support if p[1] == 0)

    def __repr__(self) -> str:
        return f"ToricCode(q={self.q}, n={self.n}, k={self.k})"


def build_code(field: Field, U: Iterable[Point], support: Iterable[Point] | None = None,
               *, allow_empty: bool = False) -> ToricCode:
    """Evaluation code of the monomials in ``U`` (reduced mod q-1)."""
    if field.q < 3:
        raise ValueError("toric codes need q >= 3")
    U = U if isinstance(U, PointSet) else PointSet(U)
    exps = reduce_mod(U, field.q - 1)
    if len(exps) == 0 and not allow_empty:
        raise EmptyExponentSet("exponent set is empty")
    pts = tuple(torus_points(field.q)) if support is None else tuple(tuple(p) for p in support)
    G = evaluation_matrix(field, exps, pts) if len(exps) else np.zeros((0, len(pts)), dtype=np.int64)
    G.flags.writeable = False
    return ToricCode(field, exps, pts, G)


def encode(code: ToricCode, message) -> np.ndarray:
    m = np.asarray(message, dtype=np.int64).reshape(-1)
    if m.size != code.k:
        raise LengthMismatch(f"message length {m.size} != dimension {code.k}")
    if code.k == 0:
        return np.zeros(code.n, dtype=np.int64)
    return code.field.matmul(m, code.G)


def weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def is_codeword(code: ToricCode, v) -> bool:
    return bool(linalg.in_row_space(code.field, code.G, v)[0])


def min_distance_exhaustive(code: ToricCode, *, jobs: int = 1,
                            limit: int = linalg.ENUMERATION_LIMIT) -> int | None:
    """Exact minimum distance by enumerating all ``q**k - 1`` nonzero
    codewords.  None for the zero code; TooLarge beyond ``limit``."""
    if code.k == 0:
        return None
    return linalg.min_weight(code.field, code.G, jobs=jobs, limit=limit)


def dual_code(code: ToricCode) -> ToricCode:
    """Dual code, itself toric with exponents H minus the reduction of -U."""
    if not code.full_support:
        raise UnsupportedSupport("dual toric code needs the full torus as support")
    return build_code(code.field, dual_complement(code.exponents, code.q), allow_empty=True)


def star_inner(field: Field, u, v) -> int:
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise LengthMismatch(f"lengths {u.shape} and {v.shape} differ")
    return int(field.vsum(field.vmul(u, v)))


def schur(field: Field, u, v) -> np.ndarray:
    """Coordinatewise product."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise LengthMismatch(f"lengths {u.shape} and {v.shape} differ")
    return field.vmul(u, v)


# -- Laurent polynomials as {exponent: coefficient} dicts ---------------------

Poly = dict[Point, int]


def poly_mul(field: Field, f: Mapping[Point, int], g: Mapping[Point, int]) -> Poly:
    out: Poly = {}
    for a, ca in f.items():
        for b, cb in g.items():
            e = (a[0] + b[0], a[1] + b[1])
            out[e] = field.add(out.get(e, 0), field.mul(ca, cb))
    return {e: c for e, c in out.items() if c}


def poly_product(field: Field, factors: Iterable[Mapping[Point, int]]) -> Poly:
    out: Poly = {(0, 0): 1}
    for f in factors:
        out = poly_mul(field, out, f)
    return out


def linear_x(field: Field, a: int) -> Poly:
    """``x - a``."""
    return {(1, 0): 1, (0, 0): field.neg(a)} if a else {(1, 0): 1}


def linear_y(field: Field, b: int) -> Poly:
    """``y - b``."""
    return {(0, 1): 1, (0, 0): field.neg(b)} if b else {(0, 1): 1}


def poly_to_message(code: ToricCode, f: Mapping[Point, int]) -> np.ndarray:
    """Coefficient vector of ``f`` in the code's monomial basis, after
    reducing exponents mod q-1."""
    field = code.field
    msg = np.zeros(code.k, dtype=np.int64)
    for (a, b), c in f.items():
        e = (a % (field.q - 1), b % (field.q - 1))
        if e not in code.exponents:
            raise ValueError(f"monomial {(a, b)} is not in the code's exponent set")
        i = code.exponents.index(e)
        msg[i] = field.add(int(msg[i]), c)
    return msg


def message_to_poly(code: ToricCode, message) -> Poly:
    return {e: int(c) for e, c in zip(code.exponents, message) if c}
