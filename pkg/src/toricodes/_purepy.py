"""Pure numpy implementations of the hot kernels.

These are the reference path: always available, used for fields beyond
the dense-table limit, and benchmarked against the compiled module.
"""

from __future__ import annotations

import numpy as np

from .gf import Field

_CHUNK = 1 << 15


def rref(field: Field, A, pivot_limit: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over ``field``; returns ``(R, pivots)``."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref needs a 2-D array")
    rows, cols = R.shape
    limit = cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = field.vmul(field.inv(lead), R[r])
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = field.vsub(R[hit], field.vmul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def _multiples(field: Field, rows: np.ndarray) -> np.ndarray:
    # mult[i, c] = c * rows[i] for c in the prime subfield
    p = field.p
    out = np.empty((rows.shape[0], p, rows.shape[1]), dtype=np.int64)
    for c in range(p):
        out[:, c, :] = field.vmul(c, rows)
    return out


def min_weight_range(field: Field, rows: np.ndarray, n_sub: int, start: int, stop: int,
                     floor_w: int = 1) -> int:
    """Same contract as the compiled ``min_weight_range``: the Gray digits
    are recomputed from each counter value, so both visit the same words."""
    rows = np.asarray(rows, dtype=np.int64)
    K, n = rows.shape
    p = field.p
    best = n + 1
    if K == 0:
        return best
    mult = _multiples(field, rows)
    powers = p ** np.arange(K, dtype=np.int64)
    prime = field.m == 1
    for lo in range(start, stop, _CHUNK):
        hi = min(stop, lo + _CHUNK)
        N = np.arange(lo, hi, dtype=np.int64)
        digits = (N[:, None] // powers[None, :]) % p
        # modular Gray digits, so the visited set matches the compiled kernel
        nxt = np.zeros_like(digits)
        nxt[:, :-1] = digits[:, 1:]
        gray = (digits - nxt) % p
        keep = np.any(gray[:, n_sub:] != 0, axis=1)
        if not keep.any():
            continue
        gray = gray[keep]
        if prime:
            cw = (gray @ rows) % p
        else:
            cw = np.zeros((gray.shape[0], n), dtype=np.int64)
            for i in range(K):
                cw = field.vadd(cw, mult[i][gray[:, i]])
        w = int(np.count_nonzero(cw, axis=1).min())
        if w < best:
            best = w
            if best <= floor_w:
                break
    return best
