"""Exception hierarchy.  Every error raised on bad input derives from EquilefError."""


class EquilefError(Exception):
    pass


# group_core
class GroupTableError(EquilefError, ValueError):
    """Invalid Cayley data; ``cell`` names the first violating position."""

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class NotLatinSquare(GroupTableError):
    pass


class NoIdentity(GroupTableError):
    pass


class NoInverse(GroupTableError):
    pass


class NotAssociative(GroupTableError):
    pass


class DuplicateName(GroupTableError):
    pass


class GroupTooLarge(EquilefError):
    pass


class ParentMismatch(EquilefError, ValueError):
    pass


class GroupMismatch(EquilefError, ValueError):
    pass


# orbit category
class NotComposable(EquilefError, ValueError):
    pass


class SourceTargetMismatch(EquilefError, ValueError):
    pass


class NotInNormalizer(EquilefError, ValueError):
    pass


class NotSquare(EquilefError, ValueError):
    pass


# complexes
class ValidationError(EquilefError):
    """A complex or map breaks one of its laws; ``where`` locates the entry."""

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class TypeViolation(ValidationError):
    pass


class BoundarySquareNonzero(ValidationError):
    pass


class ChainLawViolation(ValidationError):
    pass


# documents
class DocumentError(EquilefError):
    pass


class SchemaError(DocumentError):
    def __init__(self, message, path=()):
        loc = "/".join(str(p) for p in path) or "<root>"
        super().__init__(f"{loc}: {message}")
        self.path = tuple(path)


class UnresolvedReference(DocumentError):
    pass


class NonCanonicalSubgroup(DocumentError):
    def __init__(self, message, suggestion=None):
        super().__init__(message)
        self.suggestion = suggestion
