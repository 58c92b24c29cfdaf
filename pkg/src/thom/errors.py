"""Exception hierarchy.

Every exception class is named after the invariant it reports, so the CLI
can print ``type(exc).__name__`` and the user sees which rule was broken.
"""


class ThomError(ValueError):
    """Base class for all input and validation errors."""


class ParseError(ThomError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


# alphabet
class DuplicateGenerator(ThomError):
    pass


class SelfPair(ThomError):
    pass


class UnknownGenerator(ThomError):
    pass


# action
class UnknownElement(ThomError):
    pass


class DuplicateElement(ThomError):
    pass


class BaseMoved(ThomError):
    pass


class CommutationViolation(ThomError):
    def __init__(self, element, first, second, via_first, via_second):
        self.witness = (element, first, second)
        super().__init__(
            f"{element}.{first}.{second} = {via_first} but "
            f"{element}.{second}.{first} = {via_second}"
        )


class MissingEntry(ThomError):
    pass


class DuplicateEntry(ThomError):
    pass


class NotASubAlphabet(ThomError):
    pass


# simplicial
class NotFlag(ThomError):
    pass


class UnknownName(ThomError):
    pass


class EmptyComplex(ThomError):
    pass


class UnknownVertex(ThomError):
    pass


# intlinalg
class NotPrime(ThomError):
    pass


class DegreeOutOfRange(ThomError):
    pass


class NonCanonical(ThomError):
    pass


class ShapeMismatch(ThomError):
    pass


# verify
class NameClash(ThomError):
    pass
