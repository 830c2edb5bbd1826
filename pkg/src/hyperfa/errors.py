"""Exception hierarchy shared by every module."""


class HyperError(Exception):
    """Base class for all errors raised by hyperfa."""


class DomainError(HyperError, ValueError):
    """A value lies outside the domain an operation is defined on."""


class IllegalWordError(HyperError, ValueError):
    """A word assignment resumes a real symbol after padding."""

    def __init__(self, position, variable):
        self.position = position
        self.variable = variable
        super().__init__(
            f"illegal word assignment: variable {variable!r} resumes a symbol "
            f"at position {position} after padding"
        )


class FragmentError(HyperError, ValueError):
    """An algorithm was handed an automaton outside its fragment."""


class AlphabetMismatchError(HyperError, ValueError):
    """Two operands disagree on the underlying alphabet."""


class ParseError(HyperError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DeadlineExceeded(HyperError):
    """A cooperative deadline passed during a long construction."""
