"""Independent reference implementations used to derive expected values.

Nothing here imports the package under test.  Field arithmetic goes
through sympy's dense GF(p)[x] routines; distances are found by plain
enumeration of every message (no Gray code, no incremental updates).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_mul, gf_rem


class NaiveField:
    """GF(p^m) with elements as ints whose base-p digits are ascending
    polynomial coefficients (the same encoding as the library)."""

    def __init__(self, p: int, poly_ascending):
        self.p = p
        self.m = len(poly_ascending) - 1
        self.q = p**self.m
        self.mod = [ZZ(c) for c in reversed(poly_ascending)]
        self.add_t = np.zeros((self.q, self.q), dtype=np.int64)
        self.mul_t = np.zeros((self.q, self.q), dtype=np.int64)
        for a in range(self.q):
            for b in range(self.q):
                self.add_t[a, b] = self._enc(gf_add(self._dec(a), self._dec(b), p, ZZ))
                self.mul_t[a, b] = self._enc(gf_rem(gf_mul(self._dec(a), self._dec(b), p, ZZ), self.mod, p, ZZ))
        self.xi = next(g for g in range(1, self.q) if self.order(g) == self.q - 1)

    def _dec(self, a: int):
        digits = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            digits.append(ZZ(r))
        while digits and digits[-1] == 0:
            digits.pop()
        return list(reversed(digits))

    def _enc(self, coeffs) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(reversed(coeffs)))

    def add(self, a, b):
        return int(self.add_t[a, b])

    def mul(self, a, b):
        return int(self.mul_t[a, b])

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def order(self, g):
        x, k = g, 1
        while x != 1:
            x = self.mul(x, g)
            k += 1
            if k > self.q:
                return 0
        return k


def naive_points(F: NaiveField):
    """Torus points as actual coordinate pairs, lexicographic in exponents."""
    return [(F.pow(F.xi, i), F.pow(F.xi, j)) for i in range(F.q - 1) for j in range(F.q - 1)]


def naive_generator(F: NaiveField, U):
    """Evaluate x^a y^b by repeated multiplication of the coordinates."""
    pts = naive_points(F)
    rows = []
    for a, b in U:
        a %= F.q - 1
        b %= F.q - 1
        rows.append([F.mul(F.pow(x, a), F.pow(y, b)) for x, y in pts])
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(pts))


def naive_rank(F: NaiveField, A) -> int:
    A = [list(map(int, row)) for row in np.asarray(A)]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    neg = {a: next(b for b in range(F.q) if F.add(a, b) == 0) for a in range(F.q)}
    inv = {a: next(b for b in range(1, F.q) if F.mul(a, b) == 1) for a in range(1, F.q)}
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = inv[A[r][c]]
        A[r] = [F.mul(s, x) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = neg[A[i][c]]
                A[i] = [F.add(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def _all_messages(q: int, k: int, chunk: int = 1 << 16):
    it = itertools.product(range(q), repeat=k)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def _codewords(F: NaiveField, G, M):
    out = np.zeros((M.shape[0], G.shape[1]), dtype=np.int64)
    for i in range(G.shape[0]):
        out = F.add_t[out, F.mul_t[M[:, i][:, None], G[i][None, :]]]
    return out


def brute_min_distance(F: NaiveField, G, sub=None) -> int | None:
    """Min weight over all nonzero codewords of G; with ``sub``, only
    words outside the row space of ``sub`` (membership by rank)."""
    G = np.asarray(G, dtype=np.int64)
    best = None
    for M in _all_messages(F.q, G.shape[0]):
        C = _codewords(F, G, M)
        w = np.count_nonzero(C, axis=1)
        w[~np.any(M != 0, axis=1)] = 10**9
        if sub is None:
            cand = int(w.min())
            if cand < 10**9 and (best is None or cand < best):
                best = cand
            continue
        rs = naive_rank(F, sub)
        for idx in np.argsort(w):
            if w[idx] >= 10**9 or (best is not None and w[idx] >= best):
                break
            if naive_rank(F, np.vstack([sub, C[idx]])) > rs:
                best = int(w[idx])
                break
    return best


def xab_points_by_inequalities(a: int, b: int, q: int):
    """0 <= y <= q-2, x >= 0, and (q-2) x <= a (q-2) - (a-b) y."""
    return sorted((x, y) for y in range(q - 1) for x in range(a + 1)
                  if Fraction(x) * (q - 2) <= a * (q - 2) - (a - b) * y)


def hirzebruch_points_by_inequalities(d: int, e: int, r: int):
    """0 <= x <= d, y >= 0, y <= e + r x."""
    return sorted((x, y) for x in range(d + 1) for y in range(e + r * d + 1) if y <= e + r * x)

