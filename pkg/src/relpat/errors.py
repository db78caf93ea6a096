"""Exception hierarchy.

Three families map onto the CLI exit codes: parse problems (2),
precondition violations (3) and exceeded budgets (4).
"""


class RelPatError(Exception):
    pass


class ParseError(RelPatError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DuplicateVariable(ParseError):
    pass


class UnknownSymbolInPairs(ParseError):
    pass


class PreconditionViolated(RelPatError, ValueError):
    pass


class NotReversalFriendly(PreconditionViolated):
    pass


class WrongKind(PreconditionViolated):
    pass


class UnknownGroup(PreconditionViolated, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MissingVariable(PreconditionViolated, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NonBinaryAlphabet(PreconditionViolated):
    pass


class AlphabetTooSmall(PreconditionViolated):
    pass


class NotP23(PreconditionViolated):
    pass


class NotTerminalFree(PreconditionViolated):
    pass


class MissingImage(PreconditionViolated, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAMember(PreconditionViolated):
    pass


class InvalidDecomposition(PreconditionViolated):
    pass


class EmptyConstruction(PreconditionViolated):
    pass


class ZeroGenerator(PreconditionViolated):
    pass


class DimensionMismatch(PreconditionViolated):
    pass


class NegativeLabelPresent(PreconditionViolated):
    pass


class NotExpressible(PreconditionViolated):
    """A signed pattern that has no reversal-relation counterpart (e.g. ``x x``)."""


class BudgetExceeded(RelPatError):
    pass


class GroupTooLarge(BudgetExceeded):
    pass


class InstanceTooLarge(BudgetExceeded):
    pass


class WitnessNotFoundWithinBound(BudgetExceeded):
    pass


class UnambiguityCheckFailed(RelPatError, AssertionError):
    """Internal consistency failure; must never fire on valid inputs."""
