"""Named invariant suites, runnable from the library or ``toricodes check``.

Each suite returns a list of ``CheckResult``; randomised suites take a
numpy Generator so runs are reproducible from a seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import linalg
from .code import build_code, dual_code, encode, evaluation_matrix, schur, torus_points
from .gf import Field
from .lattice import PointSet, box, minkowski_sum, reduce_mod


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "ok": self.ok, "detail": self.detail}


def random_subset(q: int, rng: np.random.Generator, *, nonempty: bool = True) -> PointSet:
    H = list(box(q))
    while True:
        mask = rng.random(len(H)) < rng.uniform(0.1, 0.9)
        U = PointSet(p for p, keep in zip(H, mask) if keep)
        if len(U) or not nonempty:
            return U


def duality(field: Field, rng: np.random.Generator, samples: int = 50) -> list[CheckResult]:
    out = []
    n = (field.q - 1) ** 2
    for s in range(samples):
        U = random_subset(field.q, rng)
        C = build_code(field, U)
        D = dual_code(C)
        prod_zero = D.k == 0 or not np.any(field.matmul(D.G, C.G.T))
        dims = C.k + D.k == n and linalg.rank(field, C.G) == C.k
        out.append(CheckResult("duality", f"q={field.q} sample {s}", bool(prod_zero and dims),
                               f"|U|={C.k} k_dual={D.k}"))
    return out


def schur_containment(field: Field, rng: np.random.Generator, samples: int = 20,
                      words: int = 5) -> list[CheckResult]:
    q = field.q
    # every pair of monomials: the product row is the row of the reduced sum,
    # which by bilinearity covers all pairs of codes at this q
    H = list(box(q))
    E = evaluation_matrix(field, H, torus_points(q))
    Ha = np.array(H)
    s = (Ha[:, None, :] + Ha[None, :, :]) % (q - 1)
    target = E[s[..., 0] * (q - 1) + s[..., 1]]
    prod = field.vmul(E[:, None, :], E[None, :, :])
    bad = int(np.count_nonzero(np.any(prod != target, axis=2)))
    out = [CheckResult("schur", f"q={q} all monomial pairs", bad == 0, f"{bad} mismatching pairs")]
    for s in range(samples):
        U, Ut = random_subset(q, rng), random_subset(q, rng)
        A, B = build_code(field, U), build_code(field, Ut)
        V = build_code(field, reduce_mod(minkowski_sum(A.exponents, B.exponents), q - 1))
        prods = [schur(field, encode(A, rng.integers(0, q, A.k)), encode(B, rng.integers(0, q, B.k)))
                 for _ in range(words)]
        ok = bool(linalg.in_row_space(field, V.G, np.array(prods)).all())
        out.append(CheckResult("schur", f"q={q} sample {s}", ok, f"|U|={A.k} |Ut|={B.k} |V|={V.k}"))
    return out


def character_sums(field: Field) -> list[CheckResult]:
    """``e(m) * e(m')`` summed over the torus is 0 unless ``m + m'`` is 0
    mod q-1 in both coordinates, where it is ``(q-1)**2`` mod p."""
    q = field.q
    H = list(box(q))
    E = evaluation_matrix(field, H, torus_points(q))
    M = field.matmul(E, E.T)
    full = ((q - 1) ** 2) % field.p
    Ha = np.array(H)
    s = (Ha[:, None, :] + Ha[None, :, :]) % (q - 1)
    expected = np.where(np.all(s == 0, axis=2), full, 0)
    bad = int(np.count_nonzero(M != expected))
    return [CheckResult("character-sums", f"q={q} all {len(H)}x{len(H)} pairs", bad == 0,
                        f"{bad} mismatching pairs")]


def thresholds_suite(field: Field, rng: np.random.Generator, samples: int = 5,
                     subset_samples: int = 200) -> list[CheckResult]:
    """Exact Massey thresholds against rank-based reconstruction and
    privacy on random exponent sets."""
    from .lsss import SharingScheme, determines, thresholds

    out = []
    q = field.q
    H = list(box(q))
    kmax = max(1, min(len(H), int(np.log(10**6) / np.log(q))))
    for s in range(samples):
        # small |U| keeps the exhaustive distance cheap
        k = int(rng.integers(1, kmax + 1))
        U = PointSet(H[i] for i in rng.choice(len(H), k, replace=False))
        sch = SharingScheme(field, U)
        th = thresholds(sch)
        r, t = th.reconstruction.exact, th.privacy.exact
        name = f"q={q} sample {s} |U|={sch.k}"
        if r is None or t is None:
            out.append(CheckResult("thresholds", name, True, "exact thresholds not available; skipped"))
            continue
        players = sch.players
        n = len(players)
        ok = True
        notes = []
        if n <= 10:
            # exhaustive: every size >= r reconstructs, every size <= t is private,
            # and both thresholds are tight
            for size in range(n + 1):
                flags = [determines(sch, c) for c in combinations(players, size)]
                if size >= r and not all(flags):
                    ok = False
                    notes.append(f"size {size} fails to reconstruct")
                if size <= t and any(flags):
                    ok = False
                    notes.append(f"size {size} leaks")
            if r > 0 and all(determines(sch, c) for c in combinations(players, r - 1)):
                ok = False
                notes.append("r not tight")
            if t + 1 <= n and not any(determines(sch, c) for c in combinations(players, t + 1)):
                ok = False
                notes.append("t not tight")
        elif r > n:
            # a weight-1 word at P0: not even all players together learn the secret
            if determines(sch, players):
                ok = False
                notes.append("all players reconstruct although r > n")
        else:
            for _ in range(subset_samples):
                big = [players[i] for i in rng.choice(n, r, replace=False)]
                if not determines(sch, big):
                    ok = False
                    notes.append("sampled size-r set fails")
                    break
                if t >= 1:
                    small = [players[i] for i in rng.choice(n, t, replace=False)]
                    if determines(sch, small):
                        ok = False
                        notes.append("sampled size-t set leaks")
                        break
        out.append(CheckResult("thresholds", name, ok, f"r={r} t={t} " + "; ".join(notes)))
    return out


SUITES = {
    "duality": lambda F, rng, **kw: duality(F, rng, **kw),
    "schur": lambda F, rng, **kw: schur_containment(F, rng, **kw),
    "character-sums": lambda F, rng, **kw: character_sums(F),
    "thresholds": lambda F, rng, **kw: thresholds_suite(F, rng, **kw),
}


def run_suite(name: str, field: Field, seed: int, samples: int | None = None) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rng = np.random.default_rng(seed)
    kw = {} if samples is None or name == "character-sums" else {"samples": samples}
    return SUITES[name](field, rng, **kw)
