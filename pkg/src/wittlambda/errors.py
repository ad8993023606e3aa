"""Exception hierarchy shared by every module."""


class WittLambdaError(Exception):
    """Base class for all library errors."""


class ParseError(WittLambdaError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        parts = []
        if source is not None:
            parts.append(str(source))
        if line is not None:
            parts.append(f"line {line}")
        if column is not None:
            parts.append(f"column {column}")
        super().__init__(f"{', '.join(parts)}: {message}" if parts else message)


class PresentationError(WittLambdaError):
    """A relation set that cannot be oriented into a confluent rewriting system."""


class NonIntegralDivision(WittLambdaError):
    def __init__(self, coefficient, n):
        self.coefficient = coefficient
        self.n = n
        super().__init__(f"coefficient {coefficient} is not divisible by {n}")


class BudgetExceeded(WittLambdaError):
    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} evaluations, budget is {budget}")


class PosetTooLarge(BudgetExceeded):
    pass


class MismatchedTruncation(WittLambdaError):
    pass


class UndeclaredPrime(WittLambdaError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"psi_{p} is neither declared nor covered by a default rule")


class NotLambdaMap(WittLambdaError):
    pass


class NotIrreducible(WittLambdaError):
    pass


class TorsionBase(WittLambdaError):
    """lambda-operations are only computed over torsion-free bases."""
