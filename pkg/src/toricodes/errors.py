"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures to
distinct process exit statuses.
"""

from __future__ import annotations


class ToricError(Exception):
    exit_code = 10


# -- field -----------------------------------------------------------------
class FieldError(ToricError):
    exit_code = 11


class NonPrime(FieldError, ValueError):
    pass


class Reducible(FieldError, ValueError):
    pass


class Unsupported(FieldError, ValueError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class LogOfZero(FieldError, ValueError):
    pass


# -- lattice ---------------------------------------------------------------
class LatticeError(ToricError):
    exit_code = 12


class DegeneratePolytope(LatticeError, ValueError):
    pass


class NotInH(LatticeError, ValueError):
    pass


class RangeViolation(LatticeError, ValueError):
    pass


# -- codes -----------------------------------------------------------------
class CodeError(ToricError):
    exit_code = 13


class EmptyExponentSet(CodeError, ValueError):
    pass


class LengthMismatch(CodeError, ValueError):
    pass


class TooLarge(CodeError):
    """Exhaustive enumeration refused: the search space exceeds the guard."""

    def __init__(self, size: int, limit: int):
        super().__init__(f"search space {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


class UnsupportedSupport(CodeError, ValueError):
    pass


# -- decoder ---------------------------------------------------------------
class DecoderError(ToricError):
    exit_code = 20


class AssumptionFailed(DecoderError):
    def __init__(self, which: str, lhs, rhs, detail: str = ""):
        msg = f"assumption ({which}) failed: {lhs} vs {rhs}"
        if detail:
            msg += f" [{detail}]"
        super().__init__(msg)
        self.which = which
        self.lhs = lhs
        self.rhs = rhs


class NoLocator(DecoderError):
    exit_code = 21


class InconsistentRecovery(DecoderError):
    exit_code = 22


class ZeroLocator(DecoderError, ValueError):
    pass


# -- secret sharing --------------------------------------------------------
class SharingError(ToricError):
    exit_code = 30


class Insufficient(SharingError):
    exit_code = 31


class InconsistentShares(SharingError):
    exit_code = 32


class NotApplicable(SharingError):
    exit_code = 33


class Inconsistent(SharingError):
    exit_code = 34


class Underdetermined(SharingError):
    exit_code = 35


# -- quantum ---------------------------------------------------------------
class QuantumError(ToricError):
    exit_code = 40


class NestingFailed(QuantumError):
    pass


class NotNested(QuantumError, ValueError):
    pass
