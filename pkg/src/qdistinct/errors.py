"""Exception types shared across the package."""


class ContractError(ValueError):
    """An argument violates the documented preconditions of an operation."""


class NumericalError(RuntimeError):
    """A numerical routine (eigensolver, quadrature) failed to converge.

    ``module`` names the subsystem that failed so the command line can report
    it; ``achieved`` carries the tolerance actually reached, when known.
    """

    def __init__(self, message, module="", achieved=None):
        super().__init__(message)
        self.module = module
        self.achieved = achieved
