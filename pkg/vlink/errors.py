"""Domain errors for vlink"""

from typing import Optional


class VlinkError(ValueError):
    """Base class of every error raised by vlink on bad input"""


class GaussCodeError(VlinkError):
    """
    A Gauss code could not be turned into a diagram.

    Args:
        message: Human readable description
        position: Character offset in the input, when one applies
    """
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class GaussSyntaxError(GaussCodeError):
    """The input does not follow the Gauss-code grammar"""


class UnpairedLabel(GaussCodeError):
    """A label is missing its O or its U occurrence"""


class DuplicateRole(GaussCodeError):
    """A label occurs twice with the same role"""


class SignMismatch(GaussCodeError):
    """The two occurrences of a label carry different signs"""


class UnknownChord(VlinkError):
    """No chord with this label exists in the diagram"""


class NotASelfChord(VlinkError):
    """The operation needs a self chord but got a linking chord"""


class ComponentIndexError(VlinkError):
    """Circle index out of range"""


class MultiComponent(VlinkError):
    """The operation is only defined on one-component diagrams"""


class BadPlacement(VlinkError):
    """A move template was given an invalid gap or circle"""


class NotAKink(VlinkError):
    """The chord's endpoints are not adjacent on one circle"""


class PatternMismatch(VlinkError):
    """The chords do not form the configuration a move needs"""


class UnknownFixture(VlinkError):
    """No corpus fixture with this name exists"""
