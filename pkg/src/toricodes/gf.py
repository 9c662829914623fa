"""Exact arithmetic in GF(p^m).

Elements are integers ``rep`` in ``[0, q)``; the base-``p`` digits of
``rep`` are the polynomial-basis coordinates (digit ``i`` is the
coefficient of ``x**i``).  Reduction polynomials are coefficient lists in
ascending degree order, monic, so ``poly[-1] == 1``.

Scalar methods (``add``, ``mul``, ...) work on Python ints; the ``v*``
methods are their numpy counterparts and broadcast like ufuncs.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, LogOfZero, NonPrime, Reducible, Unsupported

MAX_ORDER = 1 << 20
# Dense q x q add/mul tables are built only up to this order.
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**m``; raise NonPrime if it is not a prime power."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NonPrime(f"{q} is not a prime power")
    return p, m


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), ascending coefficient lists --------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _monic_polys(degree: int, p: int):
    for low in product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if poly[0] % p == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for cand in _monic_polys(deg, p):
            if not _polymod(poly, cand, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    for cand in _monic_polys(m, p):
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


# Conventional low-weight monic irreducibles (ascending coefficients) for
# every p^m <= 1024 with m >= 2.  Checked irreducible at import.
DEFAULT_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 1, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 0, 0, 0, 0, 1, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
    (17, 2): (3, 0, 1),
    (19, 2): (1, 0, 1),
    (23, 2): (1, 0, 1),
    (29, 2): (2, 0, 1),
    (31, 2): (1, 0, 1),
}


def _verify_default_table() -> None:
    for (p, m), poly in DEFAULT_POLYS.items():
        if len(poly) != m + 1 or poly[-1] != 1 or not is_irreducible(poly, p):
            raise AssertionError(f"bundled polynomial for GF({p}^{m}) is not irreducible")


_verify_default_table()


class Field:
    """The finite field GF(p^m) with a fixed primitive element ``xi``.

    ``xi`` is the smallest generator of the multiplicative group in rep
    order, so the torus point ordering is reproducible.
    """

    def __init__(self, p: int, m: int = 1, poly: Sequence[int] | None = None):
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if m < 1:
            raise Unsupported(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_ORDER:
            raise Unsupported(f"field order {q} exceeds {MAX_ORDER}")
        if poly is None:
            if m == 1:
                poly = (0, 1)
            elif (p, m) in DEFAULT_POLYS:
                poly = DEFAULT_POLYS[(p, m)]
            else:
                poly = smallest_irreducible(p, m)
        else:
            poly = [int(c) % p for c in poly]
            if len(poly) != m + 1 or poly[-1] != 1:
                raise Reducible(f"reduction polynomial must be monic of degree {m}: {poly}")
            if not is_irreducible(poly, p):
                raise Reducible(f"{poly} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.poly = tuple(int(c) for c in poly)
        self._powers = [p**i for i in range(m + 1)]
        self.xi = self._find_primitive()
        exp = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._mul_raw(x, self.xi)
        self.exp_table = exp
        self.log_table = log
        self.exp_table.flags.writeable = False
        self.log_table.flags.writeable = False

    # -- construction helpers ----------------------------------------------
    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, d: Sequence[int]) -> int:
        return sum(c * self._powers[i] for i, c in enumerate(d))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        r = _polymod(prod, self.poly, self.p)
        return self._undigits(r)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.q - 1
        factors = _prime_factors(n)
        for g in range(1, self.q):
            if self._pow_raw(g, n) != 1:
                continue
            if all(self._pow_raw(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    # -- descriptor ----------------------------------------------------------
    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "poly": list(self.poly)}

    def to_json(self) -> str:
        return json.dumps(self.descriptor(), separators=(",", ":"))

    @classmethod
    def from_descriptor(cls, d: dict) -> "Field":
        return get_field(int(d["p"]), int(d["m"]), d.get("poly"))

    @classmethod
    def from_json(cls, s: str) -> "Field":
        return cls.from_descriptor(json.loads(s))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m}, poly={list(self.poly)}, xi={self.xi})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.m, self.poly) == (other.p, other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.poly))

    # -- scalar arithmetic ---------------------------------------------------
    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"{x} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp_table[(self.log_table[a] * e) % (self.q - 1)])

    def log(self, x: int) -> int:
        """Discrete logarithm to base ``xi``."""
        self._check(x)
        if x == 0:
            raise LogOfZero("log of zero")
        return int(self.log_table[x])

    def xi_pow(self, k: int) -> int:
        return int(self.exp_table[k % (self.q - 1)])

    def arith(self, op: str, *operands: int) -> int:
        """Dispatch by name: add, sub, mul, div, neg, inv, pow."""
        fn = {"add": self.add, "sub": self.sub, "mul": self.mul, "div": self.div,
              "neg": self.neg, "inv": self.inv, "pow": self.pow}.get(op)
        if fn is None:
            raise ValueError(f"unknown operation {op!r}")
        return fn(*operands)

    def elements(self) -> range:
        return range(self.q)

    # -- dense tables ----------------------------------------------------------
    @cached_property
    def tables(self) -> dict[str, np.ndarray] | None:
        """int32 add/mul tables and neg/inv vectors, or None for q > TABLE_LIMIT."""
        if self.q > TABLE_LIMIT:
            return None
        r = np.arange(self.q, dtype=np.int64)
        add = self._vadd_raw(r[:, None], r[None, :])
        mul = self._vmul_raw(r[:, None], r[None, :])
        neg = self._vneg_raw(r)
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = self.exp_table[(-self.log_table[1:]) % (self.q - 1)]
        out = {"add": add, "mul": mul, "neg": neg, "inv": inv}
        for k, v in out.items():
            v = np.ascontiguousarray(v, dtype=np.int32)
            v.flags.writeable = False
            out[k] = v
        return out

    # -- vectorised arithmetic ---------------------------------------------------
    def _vadd_raw(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast_shapes(np.shape(a), np.shape(b)), dtype=np.int64)
        for i in range(self.m):
            pw = self._powers[i]
            out += (((a // pw) % self.p + (b // pw) % self.p) % self.p) * pw
        return out

    def _vneg_raw(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return np.asarray(a).copy()
        out = np.zeros(np.shape(a), dtype=np.int64)
        for i in range(self.m):
            pw = self._powers[i]
            out += ((-((a // pw) % self.p)) % self.p) * pw
        return out

    def _vmul_raw(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        la = self.log_table[a]
        lb = self.log_table[b]
        return np.where(nz, self.exp_table[(la + lb) % (self.q - 1)], 0)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self.tables
        if t is not None:
            return t["add"][a, b].astype(np.int64)
        return self._vadd_raw(a, b)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        t = self.tables
        if t is not None:
            return t["neg"][a].astype(np.int64)
        return self._vneg_raw(a)

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self.tables
        if t is not None:
            return t["mul"][a, b].astype(np.int64)
        return self._vmul_raw(a, b)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("zero has no inverse")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def vdiv(self, a, b) -> np.ndarray:
        return self.vmul(a, self.vinv(b))

    def vsum(self, a, axis=None) -> np.ndarray:
        """Field sum along ``axis`` (all entries when ``axis`` is None)."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return np.sum(a, axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if a.size else np.zeros(
                np.sum(a, axis=axis).shape, dtype=np.int64)
        out = 0
        for i in range(self.m):
            pw = self._powers[i]
            out = out + (np.sum((a // pw) % self.p, axis=axis) % self.p) * pw
        return np.asarray(out, dtype=np.int64)

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over the field."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        squeeze = B.ndim == 1
        if squeeze:
            B = B[:, None]
        if A.ndim == 1:
            A = A[None, :]
            squeeze_row = True
        else:
            squeeze_row = False
        if A.shape[1] != B.shape[0]:
            raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
        if self.m == 1 and self.p * self.p * max(A.shape[1], 1) < (1 << 62):
            out = (A @ B) % self.p
        else:
            out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
            for j in range(A.shape[1]):
                out = self.vadd(out, self.vmul(A[:, j:j + 1], B[j:j + 1, :]))
        if squeeze:
            out = out[:, 0]
        if squeeze_row:
            out = out[0]
        return out


_FIELD_CACHE: dict[tuple, Field] = {}


def get_field(p: int, m: int = 1, poly: Sequence[int] | None = None) -> Field:
    """Cached constructor; fields are immutable so sharing is safe."""
    key = (p, m, None if poly is None else tuple(int(c) for c in poly))
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = Field(p, m, poly)
        _FIELD_CACHE[key] = f
    return f


def field_for_order(q: int, poly: Sequence[int] | None = None) -> Field:
    p, m = prime_power(q)
    return get_field(p, m, poly)
