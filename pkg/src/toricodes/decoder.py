"""Decoding toric codes through their multiplicative structure.

A helper code ``C_Ut`` is chosen so that an error locator ``g`` in its
function space exists.  The pair ``(g, h = g*f)`` is found as a kernel
vector of the linear map

    (g, h) -> (g(P) y(P) - h(P))_P ,    g in F_q[Ut], h in F_q[U + Ut],

and ``f`` is then recovered from ``f(P) = h(P) / g(P)`` off the zero set
of ``g``.  Three conditions make this work:

1. ``|Ut| > t``
2. ``d(C_{U+Ut}) > t``
3. ``d(C_Ut) > n - d(C_U)``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .code import ToricCode, build_code, dual_code, encode, weight
from .errors import AssumptionFailed, InconsistentRecovery, LengthMismatch, NoLocator, ZeroLocator
from .families import Distance, certified_distance
from .gf import Field
from .lattice import Point, PointSet, minkowski_sum, reduce_mod


@dataclass(frozen=True)
class Certificate:
    name: str
    lhs: int
    rhs: int
    method: str

    @property
    def ok(self) -> bool:
        return self.lhs > self.rhs

    def as_dict(self) -> dict:
        return {"assumption": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "method": self.method, "ok": self.ok}


@dataclass(frozen=True, eq=False)
class DecoderConfig:
    field: Field
    U: PointSet
    Utilde: PointSet
    V: PointSet
    t: int
    message_code: ToricCode
    helper_code: ToricCode
    sum_code: ToricCode
    d_message: Distance
    d_helper: Distance
    d_sum: Distance
    certificates: tuple[Certificate, ...]

    @property
    def n(self) -> int:
        return self.message_code.n

    def report(self) -> dict:
        return {
            "q": self.field.q,
            "n": self.n,
            "t": self.t,
            "k_message": self.message_code.k,
            "k_helper": self.helper_code.k,
            "k_sum": self.sum_code.k,
            "d_message": self.d_message.as_dict(),
            "d_helper": self.d_helper.as_dict(),
            "d_sum": self.d_sum.as_dict(),
            "assumptions": [c.as_dict() for c in self.certificates],
        }


class DecodeResult(NamedTuple):
    message: np.ndarray
    error: np.ndarray

    @property
    def error_positions(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.error)]

    @property
    def error_values(self) -> list[int]:
        return [int(self.error[i]) for i in self.error_positions]


def check_assumptions(U, Utilde, field: Field, t: int, *, jobs: int = 1,
                      limit: int = linalg.ENUMERATION_LIMIT) -> DecoderConfig:
    """Build the three codes and certify the decoding conditions.

    Distances come from exhaustive search where ``q**k <= limit`` and from
    the recognised family formula otherwise; each certificate records
    which.  Raises AssumptionFailed on the first violated condition.
    """
    q = field.q
    U = reduce_mod(PointSet(U), q - 1)
    Ut = reduce_mod(PointSet(Utilde), q - 1)
    V = reduce_mod(minkowski_sum(U, Ut), q - 1)
    message = build_code(field, U)
    helper = build_code(field, Ut)
    summ = build_code(field, V)
    n = message.n

    certs = [Certificate("1: |Ut| > t", len(Ut), t, "count")]
    if not certs[0].ok:
        raise AssumptionFailed("1", len(Ut), t, "|Ut| must exceed t")

    d_sum = certified_distance(summ, jobs=jobs, limit=limit)
    certs.append(Certificate("2: d(C_{U+Ut}) > t", d_sum.lower, t, d_sum.source))
    if not certs[-1].ok:
        raise AssumptionFailed("2", d_sum.lower, t, f"d(C_U+Ut) via {d_sum.source}")

    d_msg = certified_distance(message, jobs=jobs, limit=limit)
    d_help = certified_distance(helper, jobs=jobs, limit=limit)
    certs.append(Certificate("3: d(C_Ut) > n - d(C_U)", d_help.lower, n - d_msg.lower,
                             f"{d_help.source} / {d_msg.source}"))
    if not certs[-1].ok:
        raise AssumptionFailed("3", d_help.lower, n - d_msg.lower,
                               f"d(C_Ut) via {d_help.source}, d(C_U) via {d_msg.source}")

    return DecoderConfig(field, U, Ut, V, t, message, helper, summ, d_msg, d_help, d_sum, tuple(certs))


def locator_system(config: DecoderConfig, y) -> np.ndarray:
    """The n x (|Ut| + |V|) matrix of the error-locating map at ``y``;
    unknowns are the coefficients of g, then of h."""
    F = config.field
    Gt = config.helper_code.G
    Gv = config.sum_code.G
    left = F.vmul(Gt, y[None, :]).T
    right = F.vneg(Gv).T
    return np.concatenate([left, right], axis=1)


def locator_kernel(config: DecoderConfig, y) -> np.ndarray:
    y = _received(config, y)
    return linalg.nullspace(config.field, locator_system(config, y))


def _received(config: DecoderConfig, y) -> np.ndarray:
    y = np.asarray(y, dtype=np.int64).reshape(-1)
    if y.size != config.n:
        raise LengthMismatch(f"received word has length {y.size}, expected {config.n}")
    if np.any((y < 0) | (y >= config.field.q)):
        raise ValueError("received word has entries outside the field")
    return y


def recover_message(config: DecoderConfig, g, h, y) -> np.ndarray:
    """Solve ``f(P) = h(P) / g(P)`` for the coefficients of ``f`` over all
    points where ``g`` does not vanish."""
    F = config.field
    gP = encode(config.helper_code, g)
    hP = encode(config.sum_code, h)
    good = np.flatnonzero(gP)
    rhs = F.vdiv(hP[good], gP[good])
    sol = linalg.solve(F, config.message_code.G[:, good].T, rhs)
    if sol is None:
        raise InconsistentRecovery("no f matches h/g off the zero set of g")
    f, nullity = sol
    if nullity:
        raise InconsistentRecovery(f"f is not determined ({len(good)} usable points)")
    return f


def decode(config: DecoderConfig, y) -> DecodeResult:
    """Return ``(message, error)`` with ``y = encode(message) + error`` and
    ``wt(error) <= t``; raise NoLocator or InconsistentRecovery otherwise."""
    y = _received(config, y)
    kt = config.helper_code.k
    K = linalg.nullspace(config.field, locator_system(config, y))
    pick = next((row for row in K if np.any(row[:kt] != 0)), None)
    if pick is None:
        raise NoLocator("kernel has no element with a nonzero locator")
    f = recover_message(config, pick[:kt], pick[kt:], y)
    err = config.field.vsub(y, encode(config.message_code, f))
    if weight(err) > config.t:
        raise InconsistentRecovery(f"recovered error weight {weight(err)} exceeds t={config.t}")
    return DecodeResult(f, err)


def locator_zero_set(config: DecoderConfig, g) -> set[Point]:
    g = np.asarray(g, dtype=np.int64)
    if not np.any(g):
        raise ZeroLocator("the zero function has no meaningful zero set")
    vals = encode(config.helper_code, g)
    return {config.helper_code.support[i] for i in np.flatnonzero(vals == 0)}


def error_correcting_pair(config: DecoderConfig) -> dict:
    """Check the pair A = C_Ut, B = (C_U * A)^perp against the four
    error-correcting-pair conditions; B is built as the dual toric code
    of ``V``."""
    F = config.field
    A = config.helper_code
    C = config.message_code
    B = dual_code(config.sum_code)
    n = config.n
    prods = F.vmul(A.G[:, None, :], C.G[None, :, :]).reshape(-1, n)
    orth = B.k == 0 or not np.any(F.matmul(prods, B.G.T))
    return {
        "(A*B) perp C": bool(orth),
        "dim A > t": A.k > config.t,
        "d(B^perp) > t": config.d_sum.lower > config.t,
        "d(A) + d(C) > n": config.d_helper.lower + config.d_message.lower > n,
        "dim B": B.k,
    }
