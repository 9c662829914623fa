"""Massey secret sharing on toric codes.

The secret is the value ``f(P0)`` of a random ``f`` in the span of the
monomials ``U``; player shares are ``f(P)`` for the other support points.
Linear schemes are all-or-nothing: a set of players either determines the
secret or learns nothing, so privacy and reconstruction are both decided
by whether the ``P0`` evaluation column lies in the span of the players'
columns.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .code import build_code, dual_code, evaluation_matrix, torus_points
from .errors import (Inconsistent, InconsistentShares, Insufficient, NotApplicable, Underdetermined,
                     UnsupportedSupport)
from .families import Distance, FamilySpec, certified_distance, recognize
from .gf import Field
from .lattice import Point, PointSet, minkowski_sum, reduce_mod

Share = tuple[Point, int]


class SharingScheme:
    """Scheme data for exponents ``U`` on support ``S`` with secret point
    ``P0``.  Players are ``S`` without ``P0``, in support order."""

    def __init__(self, field: Field, U: Iterable[Point], P0: Point = (0, 0),
                 S: Sequence[Point] | None = None, family: FamilySpec | None = None):
        q = field.q
        self.field = field
        self.U = reduce_mod(PointSet(U), q - 1)
        self.P0 = (int(P0[0]) % (q - 1), int(P0[1]) % (q - 1))
        support = torus_points(q) if S is None else [tuple(int(c) for c in p) for p in S]
        if self.P0 not in support:
            raise ValueError(f"P0={self.P0} is not in the support")
        self.support = tuple(support)
        self.full_support = S is None or self.support == tuple(torus_points(q))
        self.players: tuple[Point, ...] = tuple(p for p in support if p != self.P0)
        self._pos = {p: i for i, p in enumerate(self.players)}
        self.code = build_code(field, self.U, support=self.players)
        self.secret_column = evaluation_matrix(field, self.U, [self.P0])[:, 0]
        if family is None and self.full_support:
            family = recognize(self.U, q)
        self.family = family

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def k(self) -> int:
        return len(self.U)

    def columns(self, points: Iterable[Point]) -> np.ndarray:
        idx = [self.position(p) for p in points]
        return self.code.G[:, idx]

    def position(self, p) -> int:
        try:
            return self._pos[(int(p[0]), int(p[1]))]
        except KeyError:
            raise ValueError(f"{tuple(p)} is not a player position") from None

    def descriptor(self) -> dict:
        return {
            "field": self.field.descriptor(),
            "U": self.U.to_list(),
            "P0": list(self.P0),
            "S": None if self.full_support else [list(p) for p in self.support],
        }

    def to_json(self) -> str:
        return json.dumps(self.descriptor(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_descriptor(cls, d: dict) -> "SharingScheme":
        return cls(Field.from_descriptor(d["field"]), PointSet(d["U"]), tuple(d.get("P0", (0, 0))),
                   d.get("S"))

    def hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    def __repr__(self) -> str:
        return f"SharingScheme(q={self.field.q}, k={self.k}, players={self.n_players})"


def deal(scheme: SharingScheme, secret: int, rng: np.random.Generator, *,
         return_coefficients: bool = False):
    """Shares of ``secret``; ``f`` is uniform among functions with
    ``f(P0) = secret``.  Every monomial is a unit at ``P0``, so the first
    coefficient is solved for after drawing the rest."""
    F = scheme.field
    secret = int(secret)
    if not 0 <= secret < F.q:
        raise ValueError(f"secret {secret} is not a field element")
    f = rng.integers(0, F.q, scheme.k).astype(np.int64)
    col = scheme.secret_column
    rest = int(F.vsum(F.vmul(f[1:], col[1:]))) if scheme.k > 1 else 0
    f[0] = F.div(F.sub(secret, rest), int(col[0]))
    shares = [(p, int(v)) for p, v in zip(scheme.players, F.matmul(f, scheme.code.G))]
    return (shares, f) if return_coefficients else shares


def _split(scheme: SharingScheme, shares: Sequence[Share]) -> tuple[list[Point], np.ndarray]:
    pts = [(int(p[0]), int(p[1])) for p, _ in shares]
    if len(set(pts)) != len(pts):
        raise ValueError("repeated share position")
    for p in pts:
        scheme.position(p)
    vals = np.array([int(v) for _, v in shares], dtype=np.int64)
    if np.any((vals < 0) | (vals >= scheme.field.q)):
        raise ValueError("share value outside the field")
    return pts, vals


def recombination_vector(scheme: SharingScheme, points: Sequence[Point]) -> np.ndarray | None:
    """Coefficients ``c`` with ``sum c_P col(P) = col(P0)``, or None when
    the points do not determine the secret."""
    A = scheme.columns(points)
    if A.shape[1] == 0:
        return None if np.any(scheme.secret_column) else np.zeros(0, dtype=np.int64)
    sol = linalg.solve(scheme.field, A, scheme.secret_column)
    return None if sol is None else sol[0]


def determines(scheme: SharingScheme, points: Sequence[Point]) -> bool:
    return recombination_vector(scheme, points) is not None


def reconstruct(scheme: SharingScheme, shares: Sequence[Share]) -> int:
    F = scheme.field
    pts, vals = _split(scheme, shares)
    if pts:
        sol = linalg.solve(F, scheme.columns(pts).T, vals)
        if sol is None:
            raise InconsistentShares("shares do not come from a single function in the scheme")
    c = recombination_vector(scheme, pts)
    if c is None:
        raise Insufficient(f"{len(pts)} shares do not determine the secret")
    return int(F.vsum(F.vmul(c, vals))) if len(pts) else 0


@dataclass(frozen=True)
class Threshold:
    """``exact`` when computed from exhaustive distances; ``bound`` is
    the best proven bound, ``kind`` says whether it is an upper or lower
    bound."""

    exact: int | None
    bound: int | None
    kind: str
    source: str

    def as_dict(self) -> dict:
        return {"exact": self.exact, "bound": self.bound, "kind": self.kind, "source": self.source}

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        if self.bound is None:
            return "?"
        return ("<=" if self.kind == "upper" else ">=") + str(self.bound)


@dataclass(frozen=True)
class Thresholds:
    reconstruction: Threshold
    privacy: Threshold
    n_players: int
    distance: Distance
    dual_distance: Distance

    def as_dict(self) -> dict:
        return {
            "n_players": self.n_players,
            "r": self.reconstruction.as_dict(),
            "t": self.privacy.as_dict(),
            "d": self.distance.as_dict(),
            "d_dual": self.dual_distance.as_dict(),
        }


def _family_thresholds(spec: FamilySpec | None, q: int):
    """(r upper bound, t lower bound, source) from closed forms."""
    if spec is None:
        return None, None, ""
    N = (q - 1) ** 2
    if spec.kind == "xab":
        a, b = spec.params
        return 1 + N - (q - 1 - a), b - 1, "xab bounds"
    if spec.kind == "hirzebruch":
        d, e, r = spec.params
        return 1 + max(d * (q - 1) + (q - 1 - d) * e, (q - 1) * (e + d * r)), None, "hirzebruch formula"
    if spec.kind == "triangle":
        (a,) = spec.params
        return 1 + N - (q - 1) * (q - 1 - a), None, "triangle formula"
    return None, None, ""


def thresholds(scheme: SharingScheme, *, jobs: int = 1,
               limit: int = linalg.ENUMERATION_LIMIT) -> Thresholds:
    """Reconstruction ``r`` and privacy ``t`` thresholds.

    On the full torus the code and its dual are invariant under torus
    translations, so a minimum-weight word can be moved to be nonzero at
    ``P0``; this makes ``r = n - d + 2`` and ``t = d' - 2`` exact, with
    ``n`` the number of players and ``d``, ``d'`` the distances of the
    full-length code and its dual.
    """
    if not scheme.full_support:
        raise UnsupportedSupport("threshold formulas need the full torus as support")
    F = scheme.field
    full = build_code(F, scheme.U)
    dual = dual_code(full)
    n = scheme.n_players
    d = certified_distance(full, jobs=jobs, limit=limit, family=scheme.family)
    dd = certified_distance(dual, jobs=jobs, limit=limit) if dual.k else Distance(full.n + 1, None, "zero code")

    fam_r, fam_t, fam_src = _family_thresholds(scheme.family, F.q)
    if d.exact is not None:
        r = Threshold(n - d.exact + 2, n - d.exact + 2, "exact", d.source)
    else:
        r_bound, src = n - d.lower + 2, d.source
        if fam_r is not None and fam_r < r_bound:
            r_bound, src = fam_r, fam_src
        r = Threshold(None, r_bound, "upper", src)

    if dual.k == 0:
        # every player set is private: no dual word touches P0
        t = Threshold(n, n, "exact", "zero dual")
    elif dd.exact is not None:
        t = Threshold(dd.exact - 2, dd.exact - 2, "exact", dd.source)
    else:
        t_bound, src = dd.lower - 2, dd.source
        if fam_t is not None and fam_t > t_bound:
            t_bound, src = fam_t, fam_src
        t = Threshold(None, t_bound, "lower", src)
    return Thresholds(r, t, n, d, dd)


def strong_mult_bound(scheme: SharingScheme, method: str = "auto", *, jobs: int = 1,
                      limit: int = linalg.ENUMERATION_LIMIT) -> int:
    """Largest adversary size for which strong multiplication is
    guaranteed (negative: none).

    ``closed`` uses the X_{a,b} formula ``min(b-1, q-3-2a)`` and needs
    ``2a <= q-2``; ``generic`` combines the privacy threshold with the
    zero count of the squared space ``reduce(U+U)``; ``auto`` tries the
    closed form first.
    """
    if method not in ("auto", "closed", "generic"):
        raise ValueError(f"unknown method {method!r}")
    q = scheme.field.q
    if method in ("auto", "closed"):
        spec = scheme.family
        try:
            if spec is None or spec.kind != "xab":
                raise NotApplicable("closed form needs an X_{a,b} scheme")
            a, b = spec.params
            if 2 * a > q - 2:
                raise NotApplicable(f"2a <= q-2 violated: 2a={2 * a}, q-2={q - 2}")
            return min(b - 1, q - 3 - 2 * a)
        except NotApplicable:
            if method == "closed":
                raise
    th = thresholds(scheme, jobs=jobs, limit=limit)
    t = th.privacy.exact if th.privacy.exact is not None else th.privacy.bound
    sq = build_code(scheme.field, product_exponents(scheme))
    d_sq = certified_distance(sq, jobs=jobs, limit=limit)
    max_zeros = (q - 1) ** 2 - d_sq.lower
    return min(t, scheme.n_players - 1 - max_zeros)


def product_exponents(scheme: SharingScheme) -> PointSet:
    return reduce_mod(minkowski_sum(scheme.U, scheme.U), scheme.field.q - 1)


def multiply_shares(field: Field, a: Sequence[Share], b: Sequence[Share]) -> list[Share]:
    """Pointwise products of two share lists over their common positions."""
    bm = {tuple(p): v for p, v in b}
    return [(tuple(p), field.mul(int(v), int(bm[tuple(p)]))) for p, v in a if tuple(p) in bm]


def reconstruct_product(scheme: SharingScheme, product_shares: Sequence[Share]) -> int:
    """``h(P0)`` for the ``h`` in the squared space matching the given
    products of shares."""
    F = scheme.field
    pts, vals = _split(scheme, product_shares)
    V = product_exponents(scheme)
    G = evaluation_matrix(F, V, pts)
    at_p0 = evaluation_matrix(F, V, [scheme.P0])[:, 0]
    if not pts:
        raise Underdetermined("no product shares given")
    sol = linalg.solve(F, G.T, vals)
    if sol is None:
        raise Inconsistent("no function in the squared space fits the product shares")
    h, nullity = sol
    if nullity and linalg.solve(F, G, at_p0) is None:
        raise Underdetermined(f"{len(pts)} product shares do not determine the product")
    return int(F.vsum(F.vmul(h, at_p0)))


def rank_thresholds(scheme: SharingScheme, sizes: Iterable[int] | None = None):
    """Exhaustive rank-based check: for each subset size, whether every
    subset reconstructs and whether every subset is private.  Only for
    tiny schemes."""
    from itertools import combinations

    out = {}
    sizes = range(scheme.n_players + 1) if sizes is None else sizes
    for s in sizes:
        flags = [determines(scheme, c) for c in combinations(scheme.players, s)]
        out[s] = (all(flags), not any(flags))
    return out

