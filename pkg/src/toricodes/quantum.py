"""Asymmetric CSS parameters from nested pairs of X_{a,b} toric codes.

Only classical codes and integers live here.  For ``C1 = C_{a1,b1}`` and
``C2 = C_{a2,b2}`` with ``C1^perp <= C2`` (equivalently ``C2^perp <= C1``)
the CSS code has length ``n``, dimension ``k1 + k2 - n`` and distances

    dx = min(wt(C1 - C2^perp), wt(C2 - C1^perp))
    dz = max(wt(C1 - C2^perp), wt(C2 - C1^perp)).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

from . import linalg
from .code import ToricCode, build_code, dual_code
from .errors import LengthMismatch, NestingFailed, NotNested, RangeViolation, TooLarge
from .families import certified_distance, family_points, FamilySpec
from .gf import field_for_order


@dataclass(frozen=True)
class Nesting:
    c1_dual_in_c2: bool
    c2_dual_in_c1: bool
    dim_c1_dual: int
    dim_c2_dual: int

    @property
    def nested(self) -> bool:
        return self.c1_dual_in_c2 and self.c2_dual_in_c1


def _contained(A: ToricCode, B: ToricCode) -> bool:
    if A.k == 0:
        return True
    if B.k == 0:
        return False
    return bool(linalg.in_row_space(A.field, B.G, A.G).all())


def nesting_certificate(C1: ToricCode, C2: ToricCode) -> Nesting:
    if C1.field != C2.field or C1.n != C2.n:
        raise LengthMismatch(f"codes differ in field or length ({C1.n} vs {C2.n})")
    D1, D2 = dual_code(C1), dual_code(C2)
    fwd = _contained(D1, C2)
    back = _contained(D2, C1)
    if fwd != back:
        # dualising one inclusion gives the other, so this means a bug
        raise AssertionError("nesting is not symmetric: C1^perp <= C2 but not C2^perp <= C1, or vice versa")
    return Nesting(fwd, back, D1.k, D2.k)


def check_nesting(C1: ToricCode, C2: ToricCode) -> bool:
    """True iff ``C1^perp <= C2`` and ``C2^perp <= C1``, both checked by
    elimination."""
    return nesting_certificate(C1, C2).nested


# Above this many words, a short support search runs before enumerating.
QUICK_SEARCH_ABOVE = 10**6
QUICK_SUPPORT_BUDGET = 2_000


def _coset_weight(C: ToricCode, Csub: ToricCode, *, jobs: int = 1,
                  limit: int = linalg.ENUMERATION_LIMIT,
                  budget: int = linalg.SUPPORT_BUDGET) -> tuple[int | None, str]:
    if C.field != Csub.field or C.n != Csub.n:
        raise LengthMismatch(f"codes differ in field or length ({C.n} vs {Csub.n})")
    if not _contained(Csub, C):
        raise NotNested("subcode is not contained in the code")
    if Csub.k == C.k:
        return None, "empty difference"
    F = C.field
    sub = Csub.G if Csub.k else None
    total = F.q ** C.k
    if total <= limit:
        if total > QUICK_SEARCH_ABOVE:
            # small coset weights are found far faster through supports
            try:
                w = linalg.min_weight_support(F, C.G, sub, budget=min(budget, QUICK_SUPPORT_BUDGET))
                if w is not None:
                    return w, "support search"
            except TooLarge:
                pass
        return linalg.min_weight(F, C.G, sub, jobs=jobs, limit=limit), "exhaustive"
    try:
        return linalg.min_weight_support(F, C.G, sub, budget=budget), "support search"
    except TooLarge:
        raise TooLarge(total, limit) from None


def coset_min_weight(C: ToricCode, Csub: ToricCode, *, jobs: int = 1,
                     limit: int = linalg.ENUMERATION_LIMIT,
                     budget: int = linalg.SUPPORT_BUDGET) -> int | None:
    """Smallest weight of a word in ``C`` outside ``Csub``; None when the
    two coincide.  Exhaustive when ``q**k(C) <= limit``, otherwise a
    support search up to ``budget`` supports before giving up with
    TooLarge."""
    return _coset_weight(C, Csub, jobs=jobs, limit=limit, budget=budget)[0]


def xab_dimension(q: int, a: int, b: int) -> int:
    return ((q - 1) * (a + b + 1) + gcd(a - b, q - 2) + 1) // 2


@dataclass(frozen=True)
class QuantumParams:
    q: int
    a1: int
    b1: int
    a2: int
    b2: int
    n: int
    k1: int
    k2: int
    k: int
    dz_bound: int
    dx_bound: int
    nesting: Nesting
    predicted_nesting: bool
    w1: int | None = None          # wt(C1 - C2^perp)
    w2: int | None = None          # wt(C2 - C1^perp)
    w1_source: str = "skipped"
    w2_source: str = "skipped"
    d1: int | None = None          # wt(C1)
    d2: int | None = None          # wt(C2)

    @property
    def dz_exact(self) -> int | None:
        return None if self.w1 is None or self.w2 is None else max(self.w1, self.w2)

    @property
    def dx_exact(self) -> int | None:
        return None if self.w1 is None or self.w2 is None else min(self.w1, self.w2)

    @property
    def pure_dx(self) -> bool | None:
        return None if self.d1 is None or self.w1 is None else self.d1 == self.w1

    @property
    def pure_dz(self) -> bool | None:
        return None if self.d2 is None or self.w2 is None else self.d2 == self.w2

    @property
    def too_large(self) -> bool:
        return "too large" in (self.w1_source, self.w2_source)

    def label(self) -> str:
        dz = f"dz={self.dz_exact}" if self.dz_exact is not None else f"dz>={self.dz_bound}"
        dx = f"dx={self.dx_exact}" if self.dx_exact is not None else f"dx>={self.dx_bound}"
        return f"[[{self.n},{self.k},{dz}/{dx}]]_{self.q}"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["nesting"] = {**asdict(self.nesting), "nested": self.nesting.nested}
        d.update(dz_exact=self.dz_exact, dx_exact=self.dx_exact, pure_dx=self.pure_dx,
                 pure_dz=self.pure_dz, too_large=self.too_large, label=self.label())
        return d


def css_params(q: int, a1: int, b1: int, a2: int, b2: int, *, exact: bool = True, jobs: int = 1,
               limit: int = linalg.ENUMERATION_LIMIT,
               budget: int = linalg.SUPPORT_BUDGET) -> QuantumParams:
    """CSS parameters for the pair ``C_{a1,b1}``, ``C_{a2,b2}``.

    Nesting is decided by linear algebra; the axis-order inequalities
    ``q-2 <= a1+b2`` and ``q-2 <= a2+b1`` are only recorded as a
    prediction.  The distance bounds are ``max`` and ``min`` of
    ``q-1-a1`` and ``q-1-a2``, which follow the max/min definition of
    ``dz`` and ``dx`` for either order of ``a1``, ``a2``.
    """
    for a, b in ((a1, b1), (a2, b2)):
        if not 0 <= b <= a <= q - 2:
            raise RangeViolation(f"0 <= b <= a <= q-2 violated: a={a}, b={b}, q={q}")
    F = field_for_order(q)
    C1 = build_code(F, family_points(FamilySpec.xab(q, a1, b1)))
    C2 = build_code(F, family_points(FamilySpec.xab(q, a2, b2)))
    n = (q - 1) ** 2
    k1, k2 = xab_dimension(q, a1, b1), xab_dimension(q, a2, b2)
    if (C1.k, C2.k) != (k1, k2):
        raise AssertionError(f"dimension formula disagrees with the code: {(k1, k2)} vs {(C1.k, C2.k)}")
    nest = nesting_certificate(C1, C2)
    if not nest.nested:
        raise NestingFailed(f"C1^perp is not contained in C2 for q={q}, ({a1},{b1},{a2},{b2})")
    params = dict(q=q, a1=a1, b1=b1, a2=a2, b2=b2, n=n, k1=k1, k2=k2, k=k1 + k2 - n,
                  dz_bound=max(q - 1 - a1, q - 1 - a2), dx_bound=min(q - 1 - a1, q - 1 - a2),
                  nesting=nest, predicted_nesting=(q - 2 <= a1 + b2 and q - 2 <= a2 + b1))
    if exact:
        for key, C, other in (("1", C1, C2), ("2", C2, C1)):
            try:
                w, src = _coset_weight(C, dual_code(other), jobs=jobs, limit=limit, budget=budget)
            except TooLarge:
                w, src = None, "too large"
            params["w" + key] = w
            params["w" + key + "_source"] = src
            if w is not None:
                d = certified_distance(C, jobs=jobs, limit=limit)
                params["d" + key] = d.exact
    return QuantumParams(**params)


def nesting_survey(q: int) -> list[dict]:
    """For every admissible ``(a1, b1, a2, b2)`` at ``q``: the computed
    nesting against the axis-order prediction."""
    F = field_for_order(q)
    codes = {}
    for a in range(q - 1):
        for b in range(a + 1):
            codes[a, b] = build_code(F, family_points(FamilySpec.xab(q, a, b)))
    out = []
    keys = sorted(codes)
    for a1, b1 in keys:
        for a2, b2 in keys:
            out.append({
                "params": (a1, b1, a2, b2),
                "nested": check_nesting(codes[a1, b1], codes[a2, b2]),
                "predicted": q - 2 <= a1 + b2 and q - 2 <= a2 + b1,
            })
    return out

