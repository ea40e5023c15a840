"""Exception types shared across the package."""


class BrushingError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidFamilySpec(BrushingError):
    pass


class ParseError(BrushingError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class IndexOutOfRange(BrushingError):
    pass


class InsufficientBrushes(BrushingError):
    def __init__(self, vertex, have, need):
        self.vertex = vertex
        self.have = have
        self.need = need
        super().__init__(
            f"vertex {vertex} cannot fire: has {have} brushes, needs {need}"
        )


class IllegalFlow(BrushingError):
    def __init__(self, arc, message=""):
        self.arc = arc
        detail = f": {message}" if message else ""
        super().__init__(f"illegal flow on arc {arc}{detail}")


class InfeasibleNetwork(BrushingError):
    pass


class TooLarge(BrushingError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"instance has {n} vertices, exceeds cap {cap}")


class TopoOnlyOnCyclic(BrushingError):
    pass


class BadSize(BrushingError):
    pass


class NotAnArc(BrushingError):
    pass


class NotRootedTree(BrushingError):
    pass


class NotAcyclic(BrushingError):
    pass


class NotADecomposition(BrushingError):
    pass


class IncompleteTrace(BrushingError):
    pass


class NotATree(BrushingError):
    pass


class MethodNotApplicable(BrushingError):
    pass
