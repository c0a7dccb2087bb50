"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MultipathError(Exception):
    """Base class for all library errors."""


class InvalidGraph(MultipathError, ValueError):
    pass


class SelfLoop(InvalidGraph):
    def __init__(self, edge_index: int, vertex: int):
        super().__init__(f"edge {edge_index} is a self-loop at vertex {vertex}")
        self.edge_index = edge_index


class DuplicateEdge(InvalidGraph):
    def __init__(self, edge_index: int, pair: tuple[int, int]):
        super().__init__(f"edge {edge_index} repeats {pair} in simple mode")
        self.edge_index = edge_index


class VertexOutOfRange(InvalidGraph):
    def __init__(self, edge_index: int, vertex: int, vertex_count: int):
        super().__init__(
            f"edge {edge_index} uses vertex {vertex} but vertex_count is {vertex_count}"
        )
        self.edge_index = edge_index


class BadParameters(MultipathError, ValueError):
    pass


class NotRegularMorphism(MultipathError, ValueError):
    pass


class SizeLimitExceeded(MultipathError):
    pass


class NotAComplex(MultipathError, ArithmeticError):
    pass


class MissingCover(MultipathError, KeyError):
    pass


class InvalidAlgebra(MultipathError, ValueError):
    pass


class UngradedAlgebra(MultipathError, ValueError):
    pass


class ConfigurationMismatch(MultipathError, ValueError):
    pass


class NotDecomposable(MultipathError, ValueError):
    pass


class NotUnivalent(MultipathError, ValueError):
    pass


class NotLinear(MultipathError, ValueError):
    pass


class TorsionWarning(UserWarning):
    """Betti numbers differ between the rationals and a prime field."""
