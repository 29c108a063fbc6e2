"""Exceptions shared by every ChenLab module."""


class ChenLabError(Exception):
    pass


class ScalarError(ChenLabError, ValueError):
    pass


class AlphabetMismatchError(ChenLabError, ValueError):
    pass


class InvalidLetterError(ChenLabError, ValueError):
    pass


class PreconditionError(ChenLabError, ValueError):
    pass


class DegreeOverflowError(ChenLabError, ValueError):
    pass


class DegreeMismatchError(ChenLabError, ValueError):
    pass


class IdentityWordError(ChenLabError, ValueError):
    pass


class ZeroElementError(ChenLabError, ValueError):
    pass


class ModelError(ChenLabError, ValueError):
    pass


class ExpressionKindError(ChenLabError, ValueError):
    pass


class ExpressionSyntaxError(ChenLabError, ValueError):
    """Parse failure at a 1-based line/column of the input text."""

    def __init__(self, message, text="", line=1, column=1):
        self.message = message
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
