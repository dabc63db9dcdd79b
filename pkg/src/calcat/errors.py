"""Exception types shared across the package."""


class CalcatError(Exception):
    pass


class SpaceMismatch(CalcatError):
    def __init__(self, left, right, where=""):
        self.left = left
        self.right = right
        msg = f"space mismatch{(' in ' + where) if where else ''}: {left!r} vs {right!r}"
        super().__init__(msg)


class NotGradePreserving(CalcatError):
    pass


class NotField(CalcatError):
    pass


class MissingCapability(CalcatError):
    pass


class UsageError(CalcatError):
    pass


class ParseError(CalcatError):
    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class TermTypeError(CalcatError):
    """Raised by the typechecker; names the offending subterm."""

    def __init__(self, subterm, expected, found, message=""):
        self.subterm = subterm
        self.expected = expected
        self.found = found
        detail = message or "type mismatch"
        super().__init__(f"{detail} in `{subterm}`: expected {expected}, found {found}")


class IndexOutOfRange(CalcatError):
    pass


class NotInvertibleError(CalcatError):
    """Raised by constructors that need an inverse the model does not have."""

    def __init__(self, result, message=""):
        self.result = result
        super().__init__(message or f"not invertible: {result}")
