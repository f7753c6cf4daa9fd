"""Exception hierarchy shared by all modules."""


class SupercohomError(Exception):
    pass


class InvalidFamily(SupercohomError, ValueError):
    pass


class ParityError(SupercohomError, ValueError):
    pass


class CapacityError(SupercohomError, ValueError):
    pass


class RangeError(SupercohomError, IndexError):
    pass


class WindowError(SupercohomError, ValueError):
    """The algebra was generated over too narrow a grade window."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class AdmissibilityError(SupercohomError, ValueError):
    pass


class EmptyError(SupercohomError, ValueError):
    pass


class UnsupportedRing(SupercohomError, TypeError):
    pass


class ComplexError(SupercohomError, ArithmeticError):
    """d o d != 0 somewhere; always an internal bug or a corrupt algebra."""


class ModuliError(SupercohomError, ValueError):
    pass


class PrimeSkip(SupercohomError, ArithmeticError):
    """A denominator of the input vanishes modulo the chosen prime."""

    def __init__(self, p):
        super().__init__(f"denominator divisible by p={p}")
        self.p = p


class NotCocycleError(SupercohomError, ValueError):
    pass


class ParseError(SupercohomError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column
