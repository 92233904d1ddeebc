"""Exception types shared across the package."""


class ProblemError(ValueError):
    """The input problem is malformed or outside the supported fragment."""


class ParseError(ProblemError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        where = f"{line}:{column}: " if line else ""
        super().__init__(f"{where}{message}")


class InternalError(AssertionError):
    """An invariant of the prover itself was violated (encoder or decoder bug)."""
