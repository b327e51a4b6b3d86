"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class DispersionError(ValueError):
    """Base class for all errors raised by cdispersion."""


# -- instance construction ---------------------------------------------------

class InstanceError(DispersionError):
    pass


class NonSquare(InstanceError):
    pass


class NegativeEntry(InstanceError):
    def __init__(self, i, j, value):
        super().__init__(f"negative or non-finite distance d({i},{j}) = {value!r}")
        self.i, self.j, self.value = i, j, value


class AsymmetricEntry(InstanceError):
    def __init__(self, i, j):
        super().__init__(f"asymmetric entry: d({i},{j}) != d({j},{i})")
        self.i, self.j = i, j


class NonzeroDiagonal(InstanceError):
    def __init__(self, i):
        super().__init__(f"nonzero diagonal entry d({i},{i})")
        self.i = i


class TooFewPoints(InstanceError):
    pass


class NonFiniteCoordinate(InstanceError):
    pass


class FormatError(InstanceError):
    """Malformed instance, solution or graph file."""


# -- cost evaluation -------------------------------------------------------

class SubsetTooSmall(DispersionError):
    pass


class PointNotInSubset(DispersionError):
    pass


class IndexOutOfRange(DispersionError):
    pass


# -- solvers -----------------------------------------------------------------

class InvalidParams(DispersionError):
    pass


class InstanceTooSmall(DispersionError):
    pass


class NothingToAdd(DispersionError):
    pass


class BudgetExceeded(DispersionError):
    def __init__(self, required, budget):
        super().__init__(f"enumeration needs {required} subsets, budget is {budget}")
        self.required, self.budget = required, budget


# -- reduction -----------------------------------------------------------------

class GraphError(DispersionError):
    pass


class GraphTooSmall(GraphError):
    pass


class NotReductionImage(DispersionError):
    pass


class CostNot2c(DispersionError):
    pass


class ApproximationViolation(AssertionError):
    """Raised by the ratio harness when a record breaks the 2c bound."""

    def __init__(self, records):
        super().__init__(f"{len(records)} record(s) exceed the 2c bound: {records!r}")
        self.records = records
