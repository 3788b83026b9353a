"""Exception hierarchy shared by the library and the CLI."""


class ScoreSeqError(Exception):
    """Base class for all errors raised by scoreseq."""


class InputError(ScoreSeqError, ValueError):
    """Malformed input: empty, unsorted, negative or mismatched data."""


class InputRangeError(InputError):
    """A score exceeds the supported range (overflow guard)."""


class ResourceLimitError(ScoreSeqError, RuntimeError):
    """A configured state, node or search-space budget was exhausted.

    This is distinct from "no solution": the computation was abandoned
    before it could decide.
    """
