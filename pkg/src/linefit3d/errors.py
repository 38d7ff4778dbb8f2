class LineFitError(Exception):
    pass


class EmptyCloudError(LineFitError, ValueError):
    def __init__(self, message: str = "empty point cloud"):
        super().__init__(message)


class InvalidLineError(LineFitError, ValueError):
    pass


class ConvergenceError(LineFitError, ArithmeticError):
    def __init__(self, message: str = "eigensolver failed to converge"):
        super().__init__(message)


class DegenerateConfigurationError(LineFitError):
    """Raised in strict mode when the fitted direction is not unique."""

    def __init__(self, classification, eigenvalues):
        self.classification = classification
        self.eigenvalues = tuple(float(v) for v in eigenvalues)
        super().__init__(
            f"degenerate configuration: {classification.value}, "
            f"eigenvalues {list(self.eigenvalues)}"
        )


class ParseError(LineFitError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)
