# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over GF(q) driven by dense add/mul tables.

Both functions mirror the pure-numpy versions in ``_purepy`` exactly.
"""

from libc.stdlib cimport free, calloc


def rref_tables(int[:, ::1] R, const int[:, ::1] add, const int[:, ::1] mul,
                const int[::1] neg, const int[::1] inv, Py_ssize_t pivot_limit):
    """Reduced row echelon form of ``R`` in place; returns pivot columns.

    Pivots are searched only in columns ``< pivot_limit``.
    """
    cdef Py_ssize_t rows = R.shape[0], cols = R.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int f, s, x
    pivots = []
    for c in range(pivot_limit):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        with nogil:
            if piv != r:
                for j in range(cols):
                    x = R[r, j]
                    R[r, j] = R[piv, j]
                    R[piv, j] = x
            s = inv[R[r, c]]
            if s != 1:
                for j in range(c, cols):
                    R[r, j] = mul[s, R[r, j]]
            for i in range(rows):
                if i == r:
                    continue
                f = R[i, c]
                if f == 0:
                    continue
                f = neg[f]
                for j in range(c, cols):
                    if R[r, j] != 0:
                        R[i, j] = add[R[i, j], mul[f, R[r, j]]]
        pivots.append(c)
        r += 1
    return pivots


cdef long long _min_weight(const int[:, ::1] rows, const int[:, ::1] add, int p,
                           Py_ssize_t n_sub, long long start, long long stop,
                           long long floor_w) nogil:
    cdef Py_ssize_t K = rows.shape[0], n = rows.shape[1]
    cdef Py_ssize_t i, j, c
    cdef long long N, rem, best = n + 1, w = 0
    cdef int old, new, t
    cdef Py_ssize_t active = 0
    cdef int *counter = <int *> calloc(K + 1, sizeof(int))
    cdef int *gray = <int *> calloc(K + 1, sizeof(int))
    cdef int *cw = <int *> calloc(n if n > 0 else 1, sizeof(int))
    if counter == NULL or gray == NULL or cw == NULL:
        free(counter); free(gray); free(cw)
        return -1
    # counter digits of start, then modular Gray digits g_i = n_i - n_{i+1}
    rem = start
    for i in range(K):
        counter[i] = <int>(rem % p)
        rem = rem // p
    for i in range(K):
        gray[i] = (counter[i] - counter[i + 1] + p) % p
        if i >= n_sub and gray[i] != 0:
            active += 1
        for t in range(gray[i]):
            for j in range(n):
                cw[j] = add[cw[j], rows[i, j]]
    for j in range(n):
        if cw[j] != 0:
            w += 1
    N = start
    while N < stop:
        if active > 0 and w < best:
            best = w
            if best <= floor_w:
                break
        N += 1
        if N >= stop:
            break
        c = 0
        while counter[c] == p - 1:
            counter[c] = 0
            c += 1
        counter[c] += 1
        gray[c] += 1
        if gray[c] == p:
            gray[c] = 0
        if c >= n_sub:
            if gray[c] == 0:
                active -= 1
            elif gray[c] == 1:
                active += 1
        for j in range(n):
            old = cw[j]
            new = add[old, rows[c, j]]
            cw[j] = new
            if old == 0:
                if new != 0:
                    w += 1
            elif new == 0:
                w -= 1
    free(counter)
    free(gray)
    free(cw)
    return best


def min_weight_range(const int[:, ::1] rows, const int[:, ::1] add, int p,
                     Py_ssize_t n_sub, long long start, long long stop,
                     long long floor_w=1):
    """Minimum weight of ``sum_i g_i rows[i]`` over the modular p-ary Gray
    code words with counter in ``[start, stop)``, skipping words whose
    digits at indices ``>= n_sub`` are all zero.

    Returns ``rows.shape[1] + 1`` when no word qualifies.  Stops early once
    a weight ``<= floor_w`` is found.  Releases the GIL.
    """
    cdef long long out
    with nogil:
        out = _min_weight(rows, add, p, n_sub, start, stop, floor_w)
    if out < 0:
        raise MemoryError()
    return out
