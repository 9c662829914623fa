"""Named code families and their closed-form parameters."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .code import (ToricCode, build_code, encode, linear_x, linear_y, min_distance_exhaustive,
                   poly_product, poly_to_message)
from .errors import RangeViolation, TooLarge
from .gf import Field
from .lattice import (PointSet, Polytope2, hirzebruch_count, hirzebruch_polytope, lattice_points,
                      segment_polytope, triangle_polytope, xab_count, xab_polytope)
from .linalg import ENUMERATION_LIMIT, min_weight_support

KINDS = ("rs", "hirzebruch", "xab", "triangle")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    q: int
    params: tuple[int, ...]

    @classmethod
    def reed_solomon(cls, q: int, k: int) -> "FamilySpec":
        return cls("rs", q, (k,))

    @classmethod
    def hirzebruch(cls, q: int, d: int, e: int, r: int) -> "FamilySpec":
        return cls("hirzebruch", q, (d, e, r))

    @classmethod
    def xab(cls, q: int, a: int, b: int) -> "FamilySpec":
        return cls("xab", q, (a, b))

    @classmethod
    def triangle(cls, q: int, a: int) -> "FamilySpec":
        return cls("triangle", q, (a,))

    def validate(self) -> None:
        q = self.q
        if self.kind == "rs":
            (k,) = self.params
            if not 0 < k <= q - 1:
                raise RangeViolation(f"0 < k <= q-1 violated: k={k}, q={q}")
        elif self.kind == "hirzebruch":
            hirzebruch_polytope(*self.params, q=q)
        elif self.kind == "xab":
            xab_polytope(*self.params, q)
        elif self.kind == "triangle":
            (a,) = self.params
            if not 0 <= a <= q - 2:
                raise RangeViolation(f"0 <= a <= q-2 violated: a={a}, q={q}")
        else:
            raise ValueError(f"unknown family {self.kind!r}")

    def label(self) -> str:
        names = {"rs": ("k",), "hirzebruch": ("d", "e", "r"), "xab": ("a", "b"), "triangle": ("a",)}
        inner = ",".join(f"{n}={v}" for n, v in zip(names[self.kind], self.params))
        return f"{self.kind}({inner})"


@dataclass(frozen=True)
class Distance:
    """Minimum distance knowledge: a proven lower bound, optionally the
    exact value, and where each came from."""

    lower: int
    exact: int | None = None
    source: str = ""
    advisory_lower: int | None = None

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return f">={self.lower}"

    def as_dict(self) -> dict:
        d = {"lower": self.lower, "exact": self.exact, "source": self.source}
        if self.advisory_lower is not None:
            d["advisory_lower"] = self.advisory_lower
        return d


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: Distance
    extra: dict = dc_field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d.as_dict()}


def family_polytope(spec: FamilySpec) -> Polytope2:
    spec.validate()
    if spec.kind == "rs":
        return segment_polytope(spec.params[0])
    if spec.kind == "hirzebruch":
        return hirzebruch_polytope(*spec.params, q=spec.q)
    if spec.kind == "xab":
        return xab_polytope(*spec.params, spec.q)
    return triangle_polytope(spec.params[0])


def family_points(spec: FamilySpec) -> PointSet:
    return lattice_points(family_polytope(spec))


def family_params(spec: FamilySpec) -> CodeParams:
    spec.validate()
    q = spec.q
    N = (q - 1) ** 2
    if spec.kind == "rs":
        (k,) = spec.params
        n = q - 1
        return CodeParams(n, k, Distance(n - k + 1, n - k + 1, "n-k+1"))
    if spec.kind == "hirzebruch":
        d, e, r = spec.params
        dist = min((q - 1 - d) * (q - 1 - e), (q - 1) * (q - 1 - e - r * d))
        return CodeParams(N, hirzebruch_count(d, e, r), Distance(dist, dist, "hirzebruch formula"))
    if spec.kind == "xab":
        a, b = spec.params
        return CodeParams(N, xab_count(a, b, q),
                          Distance(q - 1 - a, None, "xab bound q-1-a", advisory_lower=q - 1 - b))
    (a,) = spec.params
    dist = (q - 1) * (q - 1 - a)
    return CodeParams(N, (a + 1) * (a + 2) // 2, Distance(dist, dist, "triangle formula"))


def recognize(U: PointSet, q: int) -> FamilySpec | None:
    """The named 2-D family whose lattice points are exactly ``U``, if any.

    Reed-Solomon segments are not reported: as 2-D codes their length and
    distance differ from the 1-D family's.
    """
    if len(U) == 0:
        return None
    xs = [p[0] for p in U]
    ys = [p[1] for p in U]
    if min(xs) < 0 or min(ys) < 0:
        return None
    cands = []
    a = max(xs)
    if a <= q - 2:
        cands.append(FamilySpec.triangle(q, a))
    top = [p[0] for p in U if p[1] == q - 2]
    if top and a <= q - 2:
        cands.append(FamilySpec.xab(q, a, max(top)))
    d = a
    e = max((p[1] for p in U if p[0] == 0), default=-1)
    h = max((p[1] for p in U if p[0] == d), default=-1)
    if d >= 1 and e >= 1 and h > e and (h - e) % d == 0:
        cands.append(FamilySpec.hirzebruch(q, d, e, (h - e) // d))
    for spec in cands:
        try:
            if family_points(spec) == U:
                return spec
        except (RangeViolation, ValueError):
            continue
    return None


def certified_distance(code: ToricCode, *, jobs: int = 1, limit: int = ENUMERATION_LIMIT,
                       family: FamilySpec | None = None) -> Distance:
    """Exact distance by exhaustive search when ``q**k <= limit``, else by
    an exact family formula, else by a bounded support search; failing
    those, the family bound or the trivial bound 1."""
    q = code.q
    if code.k == 0:
        return Distance(code.n + 1, None, "zero code")
    try:
        d = min_distance_exhaustive(code, jobs=jobs, limit=limit)
        return Distance(d, d, "exhaustive")
    except TooLarge:
        pass
    spec = family if family is not None else (recognize(code.exponents, q) if code.full_support else None)
    known = family_params(spec).d if spec is not None and spec.kind != "rs" else None
    if known is not None and known.exact is not None:
        return known
    try:
        d = min_weight_support(code.field, code.G)
        if d is not None:
            return Distance(d, d, "support search")
    except TooLarge:
        pass
    return known if known is not None else Distance(1, None, "trivial")


def hirzebruch_witnesses(field: Field, d: int, e: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """The two minimum-weight codewords built from products of linear factors:
    ``x^d (y-b_1)...(y-b_{e+rd})`` and ``(x-a_1)...(x-a_d)(y-b_1)...(y-b_e)``,
    with ``a_i``, ``b_j`` the first powers of ``xi``."""
    q = field.q
    spec = FamilySpec.hirzebruch(q, d, e, r)
    code = build_code(field, family_points(spec))
    bs = [field.xi_pow(j) for j in range(e + r * d)]
    f1 = poly_product(field, [{(d, 0): 1}] + [linear_y(field, b) for b in bs])
    a_s = [field.xi_pow(i) for i in range(d)]
    f2 = poly_product(field, [linear_x(field, a) for a in a_s] + [linear_y(field, b) for b in bs[:e]])
    return encode(code, poly_to_message(code, f1)), encode(code, poly_to_message(code, f2))


def witness_weights(q: int, d: int, e: int, r: int) -> tuple[int, int]:
    return (q - 1) * (q - 1 - e - r * d), (q - 1 - d) * (q - 1 - e)

