"""
Exceptions raised across the cover-pairs toolkit.
"""

from typing import Optional


class CoverPairsError(Exception):
    """Base class for every error this package raises on purpose"""


class GraphFormatError(CoverPairsError):
    """A graph6 line or edge-list string could not be parsed"""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte offset {offset}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class GraphValueError(CoverPairsError):
    """Structurally invalid graph data: loops, out-of-range endpoints, foreign vertices"""


class GuardExceededError(CoverPairsError):
    """A size guard (vertices, faces, subsets) would be exceeded"""


class StructureError(CoverPairsError):
    """The graph does not have the structure an operation requires"""


class FamilyParameterError(CoverPairsError):
    """Family constructor called outside its parameter range"""


class PairNotRealizedError(CoverPairsError):
    """A witness was requested for a pair outside the predicted set"""


class SeriesNotRationalError(CoverPairsError):
    """Hilbert series does not have the expected rational form"""


class UnsupportedError(CoverPairsError):
    """Operation exists but not for these inputs"""


class InvariantViolation(CoverPairsError):
    """An identity that must hold for every graph failed"""
