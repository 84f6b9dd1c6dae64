"""Exception taxonomy shared by the pipeline, CLI, and HTTP layer.

Every exception carries a machine-readable ``code`` so the server can map
it onto a structured error body and the CLI onto an exit status.
"""


class TecvisError(Exception):
    code = "error"


class MalformedRecord(TecvisError):
    """Input line is not a JSON object or misses a required field."""

    code = "malformed_record"


class BadTimestamp(MalformedRecord):
    code = "bad_timestamp"


class BadState(MalformedRecord):
    code = "bad_state"


class DuplicateId(TecvisError):
    """Two records in one store share an id; counts would be unreproducible."""

    code = "duplicate_id"


class MalformedLexicon(TecvisError):
    code = "malformed_lexicon"


class BadQuery(TecvisError):
    """Invalid filter or query parameters (unknown state, lo > hi, ...)."""

    code = "bad_query"


class UnknownGroup(TecvisError):
    code = "unknown_group"


class SameGroup(TecvisError):
    code = "same_group"


class AxisMismatch(TecvisError):
    code = "axis_mismatch"


class StoreNotLoaded(TecvisError):
    code = "store_not_loaded"
