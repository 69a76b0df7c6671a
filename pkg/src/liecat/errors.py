"""Exception taxonomy shared by every module and by the CLI.

Each class carries a stable machine-readable ``code`` that the CLI places in
error payloads.
"""


class LiecatError(Exception):
    code = "LiecatError"


class ParseError(LiecatError, ValueError):
    code = "ParseError"


class IllegalRootShape(LiecatError, ValueError):
    code = "IllegalRootShape"


class KindMismatch(LiecatError, ValueError):
    code = "KindMismatch"


class TailMismatch(LiecatError, ValueError):
    """Raised when a difference of weights is not finitely supported."""

    code = "TailMismatch"


class NotComparable(LiecatError, ValueError):
    code = "NotComparable"


class UnsupportedTail(LiecatError, ValueError):
    code = "UnsupportedTail"


class UnsupportedOrbit(LiecatError, ValueError):
    """Singular or non-integral dot-orbits are outside the KL machinery."""

    code = "UnsupportedOrbit"


class BadGenerator(LiecatError, ValueError):
    code = "BadGenerator"


class RankTooSmall(LiecatError, ValueError):
    code = "RankTooSmall"


class NotInTruncation(LiecatError, ValueError):
    code = "NotInTruncation"


class OracleBoundExceeded(LiecatError, ValueError):
    code = "OracleBoundExceeded"


class StabilizationError(LiecatError, RuntimeError):
    """A quantity that must be rank-independent changed between ranks."""

    code = "StabilizationError"
