"""Exact linear algebra over GF(q) and exhaustive weight search.

The compiled ``_kernels`` extension is used when it imported and the
field has dense tables; otherwise the numpy code in ``_purepy`` runs.
Set ``TORICODES_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _purepy
from .gf import Field

try:
    if os.environ.get("TORICODES_PURE_PYTHON"):
        raise ImportError("pure python forced")
    from . import _kernels
except ImportError:
    _kernels = None

BACKEND = "cython" if _kernels is not None else "python"

# Exhaustive searches refuse more than this many codewords.
ENUMERATION_LIMIT = 10**8


def _use_compiled(field: Field, backend: str | None) -> bool:
    if backend == "python":
        return False
    if backend == "cython" and _kernels is None:
        raise RuntimeError("compiled kernels are not available")
    return _kernels is not None and field.tables is not None


def rref(field: Field, A, pivot_limit: int | None = None, backend: str | None = None):
    """Reduced row echelon form; returns ``(R, pivots)``.

    Pivots are chosen as the first nonzero entry in column order, searched
    only in columns below ``pivot_limit`` (default: all).
    """
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("rref needs a 2-D array")
    limit = A.shape[1] if pivot_limit is None else pivot_limit
    if _use_compiled(field, backend):
        t = field.tables
        R = np.ascontiguousarray(A, dtype=np.int32).copy()
        pivots = _kernels.rref_tables(R, t["add"], t["mul"], t["neg"], t["inv"], limit)
        return R.astype(np.int64), list(pivots)
    return _purepy.rref(field, A, limit)


def rank(field: Field, A) -> int:
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    return len(rref(field, A)[1])


def nullspace(field: Field, A) -> np.ndarray:
    """Basis (as rows) of ``{x : A x = 0}``, one vector per free column in
    increasing column order."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(field, A)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = field.neg(int(R[i, f]))
    return basis


def solve(field: Field, A, b) -> tuple[np.ndarray, int] | None:
    """One solution ``x`` of ``A x = b`` and the nullity of ``A``, or None
    when the system is inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    rows, ncols = A.shape
    if rows == 0:
        return np.zeros(ncols, dtype=np.int64), ncols
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, pivots = rref(field, aug, pivot_limit=ncols)
    r = len(pivots)
    if np.any(R[r:, ncols] != 0):
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, ncols]
    return x, ncols - r


def in_row_space(field: Field, G, V) -> np.ndarray:
    """Boolean per row of ``V``: does it lie in the row space of ``G``?"""
    V = np.atleast_2d(np.asarray(V, dtype=np.int64))
    G = np.asarray(G, dtype=np.int64)
    if G.size == 0 or G.shape[0] == 0:
        return ~np.any(V != 0, axis=1)
    R, pivots = rref(field, G)
    W = V.copy()
    for i, pc in enumerate(pivots):
        coef = W[:, pc].copy()
        hit = np.flatnonzero(coef)
        if hit.size:
            W[hit] = field.vsub(W[hit], field.vmul(coef[hit, None], R[i][None, :]))
    return ~np.any(W != 0, axis=1)


def row_basis(field: Field, G) -> np.ndarray:
    G = np.asarray(G, dtype=np.int64)
    if G.shape[0] == 0:
        return G.copy()
    R, pivots = rref(field, G)
    return R[: len(pivots)]


def expand_prime_rows(field: Field, G) -> np.ndarray:
    """Rows ``x**j * g_i`` (j < m): an F_p basis of the GF(q)-row space."""
    G = np.asarray(G, dtype=np.int64)
    if field.m == 1:
        return G.copy()
    out = [field.vmul(field.p**j, G[i]) for i in range(G.shape[0]) for j in range(field.m)]
    return np.array(out, dtype=np.int64).reshape(-1, G.shape[1])


def min_weight(field: Field, G, sub=None, *, floor: int = 1, jobs: int = 1,
               limit: int = ENUMERATION_LIMIT, backend: str | None = None) -> int | None:
    """Minimum Hamming weight over the row space of ``G`` minus the row
    space of ``sub`` (a subspace of it), by exhaustive enumeration.

    ``G`` and ``sub`` must have linearly independent rows.  Returns None
    when the difference is empty.  Raises TooLarge beyond ``limit`` words.
    """
    from .errors import TooLarge

    G = np.atleast_2d(np.asarray(G, dtype=np.int64))
    k = G.shape[0] if G.size else 0
    if sub is None or np.asarray(sub).size == 0:
        basis = G
        k_sub = 0
    else:
        sub = row_basis(field, np.atleast_2d(np.asarray(sub, dtype=np.int64)))
        k_sub = sub.shape[0]
        # complete the subcode basis to a basis of the row space of G
        extra = []
        cur = sub
        for row in G:
            if not in_row_space(field, cur, row[None, :])[0]:
                extra.append(row)
                cur = np.vstack([cur, row])
        basis = cur
        if k_sub + len(extra) != k:
            raise ValueError("rows of G are dependent or sub is not contained in G")
    if k == k_sub:
        return None
    total = field.q**k
    if total > limit:
        raise TooLarge(total, limit)
    rows = expand_prime_rows(field, basis)
    n_sub = k_sub * field.m
    n = rows.shape[1]
    compiled = _use_compiled(field, backend)
    if compiled:
        rows32 = np.ascontiguousarray(rows, dtype=np.int32)
        add = field.tables["add"]

        def run(lo, hi):
            return _kernels.min_weight_range(rows32, add, field.p, n_sub, lo, hi, floor)
    else:
        def run(lo, hi):
            return _purepy.min_weight_range(field, rows, n_sub, lo, hi, floor)

    jobs = max(1, int(jobs))
    if jobs == 1:
        best = run(0, total)
    else:
        step = -(-total // (jobs * 4))
        bounds = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            best = min(pool.map(lambda b: run(*b), bounds))
    return None if best > n else int(best)


# Work cap for the support search: number of candidate supports examined.
SUPPORT_BUDGET = 20_000


def min_weight_support(field: Field, G, sub=None, *, max_weight: int | None = None,
                       budget: int = SUPPORT_BUDGET) -> int | None:
    """Minimum weight over row space of ``G`` minus that of ``sub`` by
    trying supports of increasing size ``w``.

    The codewords vanishing off a support ``S`` are the left kernel of the
    columns outside ``S``; the first ``w`` for which that kernel leaves
    the subcode is the answer, which is exact.  Suited to small distances
    of large-dimension codes.  Raises TooLarge when the next level would
    push the number of examined supports past ``budget``; returns None if
    nothing is found up to ``max_weight``.
    """
    from itertools import combinations
    from math import comb

    from .errors import TooLarge

    G = np.atleast_2d(np.asarray(G, dtype=np.int64))
    k, n = G.shape
    sub_basis = None
    if sub is not None and np.asarray(sub).size:
        sub_basis = row_basis(field, np.atleast_2d(np.asarray(sub, dtype=np.int64)))
        if sub_basis.shape[0] >= rank(field, G):
            return None
    top = n if max_weight is None else min(n, max_weight)
    spent = 0
    cols = np.arange(n)
    for w in range(1, top + 1):
        spent += comb(n, w)
        if spent > budget:
            raise TooLarge(spent, budget)
        for S in combinations(range(n), w):
            rest = np.delete(cols, S)
            K = nullspace(field, G[:, rest].T)
            if K.shape[0] == 0:
                continue
            words = field.matmul(K, G)
            words = words[np.any(words != 0, axis=1)]
            if words.shape[0] == 0:
                continue
            if sub_basis is None or not in_row_space(field, sub_basis, words).all():
                return w
    return None
