class FaithfulError(RuntimeError):

    def __init__(self, operation: str, problem: str):
        self._operation = operation
        self._problem = problem
        super().__init__(f"'{operation}' failed with {problem}")

    def operation(self):
        return self._operation

    def problem(self):
        return self._problem


class ParameterError(FaithfulError):

    def __init__(self, operation: str, problem: str, field: str | None = None):
        self._field = field
        super().__init__(operation, problem)

    def field(self):
        return self._field


class NumericalError(FaithfulError):
    pass


class NotInvertibleError(NumericalError):

    def __init__(self, operation: str, report):
        self._report = report
        super().__init__(operation, "rank %d of %d at tolerance %g" % (report.numerical_rank, report.dim ** 2, report.tol))

    def report(self):
        return self._report


class GridBoundsError(NumericalError):

    def __init__(self, operation: str, bounds: str):
        self._bounds = bounds
        super().__init__(operation, "grid outside bounds: %s" % bounds)

    def bounds(self):
        return self._bounds


class MemoryBudgetError(NumericalError):
    pass
