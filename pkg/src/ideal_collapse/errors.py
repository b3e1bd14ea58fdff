"""Exception hierarchy shared by every module."""


class IdealCollapseError(Exception):
    """Base class for all library errors."""


class ResourceLimitError(IdealCollapseError):
    """A desk-scale cap was exceeded."""


# fields

class FieldError(IdealCollapseError):
    pass


class CompositeCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NoModulusFound(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class InfiniteField(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class SearchSpaceTooLarge(ResourceLimitError):
    pass


# polynomials

class ArityMismatch(IdealCollapseError):
    pass


class DegreeOverflow(ResourceLimitError):
    pass


class SingularTransform(IdealCollapseError):
    pass


# witness

class NoWitnessFound(IdealCollapseError):
    pass


class InvalidDegreeBound(IdealCollapseError, ValueError):
    pass


class InvalidWitness(IdealCollapseError, ValueError):
    """Witness is not monic, is constant, or has a root in the field."""


# collapse

class CertificateError(IdealCollapseError):
    """A freshly built cofactor certificate failed re-verification."""


# remark

class ConstantInput(IdealCollapseError, ValueError):
    pass


class NoMonicizerFound(IdealCollapseError):
    pass


# parsing

class ParseError(IdealCollapseError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class PolySyntaxError(ParseError):
    def __init__(self, line, column, expected, found=None):
        self.expected = expected
        self.found = found
        msg = f"expected {expected}"
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(msg, line, column)


class UnknownVariable(ParseError):
    def __init__(self, name, line=None, column=None):
        self.name = name
        super().__init__(f"unknown variable {name!r}", line, column)


class FieldLiteralError(ParseError):
    pass


class DuplicateGeneratorName(ParseError):
    pass
