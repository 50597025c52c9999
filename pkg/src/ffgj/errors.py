"""Exception hierarchy shared by every ffgj module."""


class FFGJError(Exception):
    """Base class for all library errors."""


class MathError(FFGJError):
    """A mathematical failure: singular input, zero pivot, broken invariant."""


class UsageError(FFGJError):
    """Malformed input or an invalid request."""


class DivisionByZero(MathError, ZeroDivisionError):
    pass


class NonExactDivision(MathError, ArithmeticError):
    """Raised when a division that must be exact leaves a remainder.

    In fraction-free elimination this always indicates a bug or a violated
    hypothesis, so the operands are kept for diagnostics.
    """

    def __init__(self, dividend: int, divisor: int):
        self.dividend = dividend
        self.divisor = divisor
        super().__init__(
            f"{dividend} is not divisible by {divisor} "
            f"(remainder {dividend % divisor})"
        )


class ZeroPivot(MathError):
    """Pivot of elimination step ``k`` (1-based) vanished."""

    def __init__(self, k: int, detail: str = ""):
        self.k = k
        msg = f"zero pivot at step k={k}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class StructurallySingular(MathError):
    """No nonzero pivot candidate exists in column ``k`` on or below row ``k``."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"no nonzero pivot in column {k} at or below row {k}")


class SingularMatrix(MathError):
    pass


class NotSquare(UsageError):
    pass


class TooLarge(UsageError):
    pass


class IndexOutOfBounds(UsageError, IndexError):
    pass


class DimensionMismatch(UsageError, ValueError):
    pass


class InvalidCase(UsageError, ValueError):
    pass


class ParseError(UsageError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
