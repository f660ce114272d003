"""Exception types shared across the package."""


class IdentityViolation(AssertionError):
    """An exact identity that should hold did not.

    ``where`` carries enough context (indices, monomial, ...) to reproduce
    the counterexample.
    """

    def __init__(self, name: str, where: dict | None = None):
        self.name = name
        self.where = where or {}
        detail = ", ".join(f"{k}={v}" for k, v in self.where.items())
        super().__init__(f"{name} violated" + (f" at {detail}" if detail else ""))


class ZeroPartialNumerator(ValueError):
    """A partial numerator a_nu vanished, which truncates the fraction."""


class ZeroScale(ValueError):
    """An equivalence-transform scale factor d_nu was zero."""


class DividedByZeroConvergent(ZeroDivisionError):
    """A convergent ratio was requested where the denominator Q_nu is zero."""


class NonPositiveError(ValueError):
    """An error magnitude was exactly zero, so its logarithm is undefined."""


class Divergence(ValueError):
    """A series was requested outside its region of convergence."""
