"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(DomainError):
    """An order or index exceeds the supported table range."""


class BracketError(RuntimeError):
    """A sign-change bracket could not be established.

    Raised by the certification scans; it signals either a numerical bug or a
    violated structural claim, and is therefore never silently swallowed.
    """
