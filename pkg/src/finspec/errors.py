"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all finspec errors."""


class NotHermitian(ToolkitError):
    pass


class NotCommuting(ToolkitError):
    pass


class EmptyFiber(ToolkitError):
    pass


class AlgebraMismatch(ToolkitError):
    pass


class NoRealStructure(ToolkitError):
    pass


class DegreeZero(ToolkitError):
    pass


class ParityMismatch(ToolkitError):
    pass


class RealStructureMismatch(ToolkitError):
    pass


class TooManyCharacters(ToolkitError):
    pass


class KindMismatch(ToolkitError):
    pass


class EndpointMismatch(ToolkitError):
    pass


class ShapeMismatch(ToolkitError):
    pass


class InvalidMorphism(ToolkitError):
    pass


class NotIsometric(ToolkitError):
    pass


class NotOntoComponents(ToolkitError):
    pass


class NonpositiveLength(ToolkitError):
    pass


class TooFewPoints(ToolkitError):
    pass
