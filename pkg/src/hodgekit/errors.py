"""Error taxonomy shared by every module and the CLI exit-code mapping."""


class HodgekitError(Exception):
    pass


class PreconditionError(HodgekitError, ValueError):
    """Bad input: violated contract, schema mismatch, out-of-range argument.

    The CLI maps this to exit code 1 together with a machine-readable reason.
    """


class InternalInvariantError(HodgekitError, RuntimeError):
    """An internal consistency check failed; this signals a bug, not bad input.

    The CLI maps this to exit code 2.
    """
