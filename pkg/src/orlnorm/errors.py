"""Shared exception types."""


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class ContractError(ValueError):
    """An operation was asked for something its contract forbids."""


class PreconditionError(RuntimeError):
    """A stated hypothesis of a bound or check is not satisfied by the input."""
