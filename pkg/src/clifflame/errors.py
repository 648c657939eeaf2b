"""Exception types shared across the package."""


class CliffLameError(Exception):
    """Base class for all errors raised by clifflame."""


class NotOneVector(CliffLameError, ValueError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"structural set entry {index} is not a 1-vector")


class NotOrthonormal(CliffLameError, ValueError):
    def __init__(self, i: int, j: int, value=None):
        self.pair = (i, j)
        self.value = value
        msg = f"entries {i} and {j} violate psi^i psi^j + psi^j psi^i = -2 delta_ij"
        if value is not None:
            msg += f" (got {value})"
        super().__init__(msg)


class InadmissibleParams(CliffLameError, ValueError):
    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__("Lame coefficients are not admissible: " + ", ".join(failed))


class NotVectorValued(CliffLameError, ValueError):
    pass


class NotASolution(CliffLameError, ValueError):
    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"field does not solve the system; residual = {residual}")


class PreconditionViolated(CliffLameError, ValueError):
    def __init__(self, hypothesis: str, residual=None):
        self.hypothesis = hypothesis
        self.residual = residual
        msg = f"precondition violated: {hypothesis}"
        if residual is not None:
            msg += f" (residual = {residual})"
        super().__init__(msg)


class DegenerateFactor(CliffLameError, ArithmeticError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"scale factor {name} vanishes; parameters are degenerate")


class VerificationFailed(CliffLameError, AssertionError):
    """A constructed object failed its own postcondition check."""


class ExprSyntaxError(CliffLameError, SyntaxError):
    def __init__(self, message: str, text: str = "", pos: int = 0, expected: str | None = None):
        self.text = text
        self.pos = pos
        self.expected = expected
        detail = f"{message} at position {pos}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class UnknownSymbol(ExprSyntaxError):
    pass
