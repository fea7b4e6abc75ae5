"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument falls outside the modeled domain (bad cell id, bad weights,
    malformed pattern, ...)."""


class FormatError(DomainError):
    """A graph or trace file does not conform to its text format."""


class GraphNotConnectedError(DomainError):
    """A query needed a path between two cells that have none."""
