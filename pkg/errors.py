# errors.py
from typing import Optional


class IdentifyError(Exception):
    """Base class for every error raised by the identifiability engine"""


class InvalidPoint(IdentifyError):
    pass


class EmptyPointSet(IdentifyError):
    pass


class DimensionError(IdentifyError):
    pass


class InvalidPartition(IdentifyError):
    pass


class InvalidRequest(IdentifyError):
    pass


class InvalidInstance(IdentifyError):
    pass


class UnsupportedDegree(InvalidInstance):
    pass


class LengthOutOfRange(InvalidInstance):
    pass


class ZeroCoefficient(InvalidInstance):
    pass


class DuplicatePoint(InvalidInstance):
    pass


class InstanceParseError(IdentifyError):
    """Malformed instance document; carries the location of the problem"""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.column = column
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if field is not None:
            location.append(f"field {field}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
