"""Exception hierarchy shared by every module."""


class FuzzyError(Exception):
    """Base class for all library errors."""


class UniverseMismatch(FuzzyError, ValueError):
    pass


class ElementNotInUniverse(FuzzyError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class GradeError(FuzzyError, ValueError):
    """A membership value is malformed, out of [0, 1] or too precise."""


class ScaleMismatch(FuzzyError, ValueError):
    pass


class MissingComponent(FuzzyError, ValueError):
    pass


class ParameterError(FuzzyError, ValueError):
    pass


class DocumentError(FuzzyError, ValueError):
    """Malformed input document; carries the offending location."""

    def __init__(self, message, *, source=None, line=None, field=None):
        self.source = source
        self.line = line
        self.field = field
        where = []
        if source is not None:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = ": ".join([", ".join(where)]) + ": " if where else ""
        super().__init__(prefix + message)
