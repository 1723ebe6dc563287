"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Malformed objects: bad indices, mixed fields, mismatched ambients."""


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class ParameterError(ValueError):
    """A catalog or constructor parameter is inadmissible."""


class ParseError(ValueError):
    """Syntax error in the polynomial or file formats."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
