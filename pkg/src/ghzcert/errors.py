"""Exception hierarchy.

Every error carries a stable ``code`` string used in machine-readable CLI
output; the code never changes even if messages are reworded.
"""


class GhzcertError(Exception):
    code = "Error"


class EmptyEdgeError(GhzcertError):
    code = "EmptyEdge"

    def __init__(self, edge_index: int):
        self.edge_index = edge_index
        super().__init__(f"edge {edge_index} is empty")


class VertexOutOfRangeError(GhzcertError):
    code = "VertexOutOfRange"

    def __init__(self, edge_index: int, vertex: int, k: int):
        self.edge_index = edge_index
        self.vertex = vertex
        super().__init__(
            f"edge {edge_index} contains vertex {vertex}, outside 1..{k}"
        )


class BadLevelError(GhzcertError):
    code = "BadLevel"

    def __init__(self, message: str, edge_index: int | None = None):
        self.edge_index = edge_index
        super().__init__(message)


class DisconnectedError(GhzcertError):
    code = "Disconnected"


class TooFewVerticesError(GhzcertError):
    code = "TooFewVertices"


class TooManyEdgesError(GhzcertError):
    code = "TooManyEdges"


class TooLargeError(GhzcertError):
    code = "TooLarge"


class SameVertexError(GhzcertError):
    code = "SameVertex"


class DimMismatchError(GhzcertError):
    code = "DimMismatch"


class RetriesExhaustedError(GhzcertError):
    code = "RetriesExhausted"

    def __init__(self, attempts: int, bound: int):
        self.attempts = attempts
        self.bound = bound
        super().__init__(
            f"no general-position orthogonal representation found in "
            f"{attempts} attempts with entry bound {bound}; retry with a "
            f"larger bound or a different seed"
        )


class DimensionInfeasibleError(GhzcertError):
    code = "DimensionInfeasible"


class NegativeExponentError(GhzcertError):
    code = "NegativeExponent"

    def __init__(self, key, exponent: int):
        self.key = key
        self.exponent = exponent
        super().__init__(
            f"entry {key} carries eps^{exponent}; leading term undefined"
        )


class NonScalarCoefficientsError(GhzcertError):
    code = "NonScalarCoefficients"


class GhzStructureError(GhzcertError):
    """A local basis label occurs in more than one term."""

    code = "NotGhz"

    def __init__(self, vertex: int, label):
        self.vertex = vertex
        self.label = label
        super().__init__(f"label {label} repeats at vertex {vertex}")


class NotOrthRepError(GhzcertError):
    code = "NotOrthRep"

    def __init__(self, e: int, f: int):
        self.e = e
        self.f = f
        super().__init__(
            f"edges {e} and {f} share no vertex but their vectors are not "
            f"orthogonal; cross term cannot be hosted"
        )


class GridTooLargeError(GhzcertError):
    code = "GridTooLarge"

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(
            f"index grid has {size} points, over the limit {limit} "
            f"(set GHZCERT_MAX_GRID to raise it)"
        )


class LevelsUnsupportedError(GhzcertError):
    code = "LevelsUnsupported"
