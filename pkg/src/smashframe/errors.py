"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can
report it and pick an exit status.
"""


class SmashFrameError(Exception):
    code = "ERROR"
    # exit status used by the CLI
    status = 2

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f"{self.code}: {self.message}" if self.message else self.code


class SpecRejected(SmashFrameError, ValueError):
    code = "REJECT"


class UsageError(SmashFrameError, ValueError):
    code = "USAGE"
    status = 1


class ParseChainError(UsageError):
    code = "PARSE_CHAIN"


class ParseGroupError(UsageError):
    code = "PARSE_GROUP"


class LengthMismatch(SmashFrameError, ValueError):
    code = "LENGTH_MISMATCH"


class NotInFilter(SmashFrameError, ValueError):
    code = "NOT_IN_FILTER"


class NotInRing(SmashFrameError, ValueError):
    code = "NOT_IN_RING"


class ZeroDenominator(SmashFrameError, ZeroDivisionError):
    code = "ZERO_DENOMINATOR"


class SpecMismatch(SmashFrameError, ValueError):
    code = "SPEC_MISMATCH"


class NotAdmissible(SmashFrameError, ValueError):
    code = "NOT_ADMISSIBLE"


class FrameInvalid(SmashFrameError):
    code = "FRAME_INVALID"


class AssertMismatch(SmashFrameError, AssertionError):
    code = "ASSERT_MISMATCH"
