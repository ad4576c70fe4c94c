"""Exception hierarchy shared by every torusdash module."""


class TorusDashError(Exception):
    """Base class for all errors raised by torusdash."""


class ConfigError(TorusDashError, ValueError):
    pass


# Input surface

class SpecSyntaxError(TorusDashError, ValueError):
    """A group spec does not match the grammar."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedFactorError(TorusDashError, ValueError):
    pass


# weyl

class DegreeMismatchError(TorusDashError, ValueError):
    pass


class GroupSizeError(TorusDashError, RuntimeError):
    pass


class IndexAssignmentError(TorusDashError, ValueError):
    pass


class MixedReflectionCountError(TorusDashError, ValueError):
    pass


class OrbitMismatchError(TorusDashError, ValueError):
    pass


# manifolds

class InvalidManifoldError(TorusDashError, ValueError):
    pass


# fivetuples

class InvalidTupleError(TorusDashError, ValueError):
    """Raised when an operation needs a valid tuple; carries the violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid 5-tuple: " + "; ".join(self.violations))


class BranchHypothesisError(TorusDashError, ValueError):
    pass


class SpecMismatchError(TorusDashError, ValueError):
    pass


# classify

class CatalogRangeError(TorusDashError, ValueError):
    pass


class UnsupportedShapeError(TorusDashError, ValueError):
    pass


USAGE_ERRORS = (SpecSyntaxError, UnsupportedFactorError)
