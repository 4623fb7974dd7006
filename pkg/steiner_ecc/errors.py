__all__ = (
    "SteinerError",
    "UsageError",
    "ParseError",
    "TreeError",
    "CycleDetected",
    "Disconnected",
    "SelfLoop",
    "DuplicateEdge",
    "IdOutOfRange",
    "ValidationError",
    "KTooLarge",
    "KTooSmall",
    "PathNotInTree",
    "InvalidPath",
    "DegeneratePath",
    "BadParams",
    "ChainLengthExceeded",
    "BudgetExceeded",
    "EXIT_OK",
    "EXIT_COUNTEREXAMPLE",
)

#: Exit code of a successful command
EXIT_OK = 0
#: Exit code of a ``check`` run that found a counterexample
EXIT_COUNTEREXAMPLE = 5


class SteinerError(Exception):
    """Base class for all steiner-ecc errors"""

    #: The process exit code the command line reports for this error
    exit_code = 1

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return self.msg


class UsageError(SteinerError):
    """Incoherent command line or run configuration"""

    exit_code = 1


class ParseError(SteinerError):
    """
    Malformed edge-list input.

    :param str msg: What went wrong
    :param int line: The 1-based line number of the offending line
    """

    exit_code = 2

    def __init__(self, msg, line=None):
        if line is not None:
            msg = "{0} at line {1}".format(msg, line)
        super(ParseError, self).__init__(msg)
        self.line = line


class TreeError(SteinerError):
    """
    An edge list that does not describe a tree.

    :param str msg: What went wrong
    :param tuple edge: The offending edge, if any
    :param int vertex: The offending vertex, if any
    :param int index: The position of the offending edge in the edge list
    """

    exit_code = 2

    def __init__(self, msg, edge=None, vertex=None, index=None):
        super(TreeError, self).__init__(msg)
        self.edge = edge
        self.vertex = vertex
        self.index = index
        self.line = None

    def at_line(self, line):
        """Attach the input line the offending edge came from"""
        self.line = line
        self.msg = "{0} at line {1}".format(self.msg, line)
        return self


class CycleDetected(TreeError):
    pass


class Disconnected(TreeError):
    pass


class SelfLoop(TreeError):
    pass


class DuplicateEdge(TreeError):
    pass


class IdOutOfRange(TreeError):
    pass


class ValidationError(SteinerError):
    """A helper class for invalid arguments to an otherwise valid tree."""

    exit_code = 3


class KTooLarge(ValidationError):
    pass


class KTooSmall(ValidationError):
    pass


class PathNotInTree(ValidationError):
    pass


class InvalidPath(ValidationError):
    pass


class DegeneratePath(ValidationError):
    pass


class BadParams(ValidationError):
    pass


class ChainLengthExceeded(ValidationError):
    """A transform chain did not reach its fixed point within its step cap"""

    pass


class BudgetExceeded(SteinerError):
    """
    The brute-force oracle would exceed its work budget.

    :param int work: The estimated number of elementary steps
    :param int budget: The budget in force
    """

    exit_code = 4

    def __init__(self, work, budget):
        super(BudgetExceeded, self).__init__(
            "Oracle work estimate {0} exceeds budget {1}".format(work, budget)
        )
        self.work = work
        self.budget = budget
