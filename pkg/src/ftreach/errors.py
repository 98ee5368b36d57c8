"""Exception hierarchy shared by all modules.

Each class carries the process exit code the command line driver uses for it.
"""


class FtreachError(Exception):
    exit_code = 2


class GraphInputError(FtreachError, ValueError):
    """Malformed graph, invalid vertex/edge id, or inconsistent arguments."""

    exit_code = 2


class ContractError(FtreachError):
    """A query falls outside the guarantee of the certificate (e.g. too many faults)."""

    exit_code = 2


class BudgetError(FtreachError):
    """Requested separator budget exceeds the configured hard limit."""

    exit_code = 3


class SizeError(FtreachError):
    """Instance too large for an exhaustive oracle."""

    exit_code = 3


class InvariantViolation(FtreachError, RuntimeError):
    """Internal invariant broken. Always a bug."""

    exit_code = 4
