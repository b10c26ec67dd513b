"""Exception types raised across the package."""


class VcboundError(Exception):
    """Base class for all errors raised by vcbound."""


class GraphBuildError(VcboundError):
    """Invalid data passed to graph construction."""


class DuplicateLabel(GraphBuildError):
    def __init__(self, label: str):
        super().__init__(f"duplicate vertex label {label!r}")
        self.label = label


class UnknownEndpoint(GraphBuildError):
    def __init__(self, label: str):
        super().__init__(f"edge endpoint {label!r} is not a declared vertex")
        self.label = label


class SelfLoop(GraphBuildError):
    def __init__(self, label: str):
        super().__init__(f"self-loop at vertex {label!r}")
        self.label = label


class DuplicateEdge(GraphBuildError):
    def __init__(self, u: str, v: str):
        super().__init__(f"duplicate edge ({u!r}, {v!r})")
        self.endpoints = (u, v)


class IndexOutOfRange(VcboundError):
    def __init__(self, index: int, n: int):
        super().__init__(f"vertex index {index} out of range for graph with {n} vertices")
        self.index = index


class PreconditionViolation(VcboundError):
    """A caller violated an operation's stated precondition."""


class TooLarge(VcboundError):
    def __init__(self, n: int, size_limit: int):
        super().__init__(
            f"graph has {n} vertices, above the exact-search limit of {size_limit}"
        )
        self.n = n
        self.size_limit = size_limit


class ZeroMaxDegreeWithEdges(VcboundError):
    def __init__(self, m: int):
        super().__init__(f"max degree 0 is impossible with {m} edges; graph data is corrupt")


class ParseError(VcboundError):
    """Malformed input file. ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EdgeCountMismatch(ParseError):
    def __init__(self, declared: int, found: int, line: int):
        super().__init__(f"problem line declares {declared} edges, found {found}", line)
        self.declared = declared
        self.found = found


class VertexOutOfRange(ParseError):
    def __init__(self, vertex: int, n: int, line: int):
        super().__init__(f"vertex {vertex} outside 1..{n}", line)
        self.vertex = vertex
