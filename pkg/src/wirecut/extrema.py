"""Extrema of total enclosed area for a wire cut into several shapes.

A wire of length L is cut into one piece per shape and each piece is bent
into that shape's perimeter. The total area is a strictly convex quadratic
of the piece lengths, so over the simplex {sum = L, all >= 0} it has a
unique interior minimum in closed form and attains its maximum at a vertex.
Boundary stationary points (one piece pinned to zero) are exposed as
diagnostics; they are minima of the restricted problem, not maxima.
"""

import math
from dataclasses import dataclass

from .geometry import Shape, area, parse_shape, sigma

__all__ = [
    "INTERIOR_MINIMUM",
    "VERTEX_MAXIMUM",
    "FACE_STATIONARY",
    "GRID_SAMPLE",
    "PartitionProblem",
    "PartitionResult",
    "total_area",
    "minimize_partition",
    "maximize_partition",
    "face_stationary",
    "paper_face_max",
]

INTERIOR_MINIMUM = "interior-minimum"
VERTEX_MAXIMUM = "vertex-maximum"
FACE_STATIONARY = "face-stationary"
GRID_SAMPLE = "grid-sample"


@dataclass(frozen=True)
class PartitionProblem:
    """A wire of positive total length cut into one piece per listed shape."""

    total_length: float
    shapes: tuple[Shape, ...]

    def __post_init__(self):
        length = self.total_length
        if not (isinstance(length, (int, float)) and math.isfinite(length)) or length <= 0:
            raise ValueError(f"total length must be a positive finite number, got {length!r}")
        shapes = tuple(parse_shape(s) for s in self.shapes)
        if len(shapes) < 2:
            raise ValueError("a partition problem needs at least two shapes")
        object.__setattr__(self, "total_length", float(length))
        object.__setattr__(self, "shapes", shapes)


@dataclass(frozen=True)
class PartitionResult:
    """Piece lengths with their areas and a tag describing the kind of point.

    ``excluded_index`` is set only for face-stationary results and names the
    piece that was pinned to zero.
    """

    kind: str
    lengths: tuple[float, ...]
    per_shape_areas: tuple[float, ...]
    total_area: float
    excluded_index: int | None = None


def total_area(shapes, lengths) -> float:
    """Total area when lengths[i] is bent into shapes[i]; no sum constraint."""
    shapes = tuple(shapes)
    lengths = tuple(lengths)
    if len(shapes) != len(lengths):
        raise ValueError("need exactly one length per shape")
    return sum(area(s, x) for s, x in zip(shapes, lengths))


def _result(kind, problem, lengths, excluded_index=None) -> PartitionResult:
    lengths = tuple(lengths)
    areas = tuple(area(s, x) for s, x in zip(problem.shapes, lengths))
    return PartitionResult(kind, lengths, areas, sum(areas), excluded_index)


def minimize_partition(problem: PartitionProblem) -> PartitionResult:
    """Unique global minimum: each piece proportional to its shape's sigma weight.

    Setting the constrained gradient to zero gives lengths[i] =
    L * sigma_i / sum(sigma), hence total = L**2 / (4 * sum(sigma)).
    """
    weights = [sigma(s) for s in problem.shapes]
    denom = sum(weights)
    scale = problem.total_length / denom
    return _result(INTERIOR_MINIMUM, problem, (w * scale for w in weights))


def maximize_partition(problem: PartitionProblem) -> PartitionResult:
    """Global maximum: the whole wire goes to the best single shape.

    The total is strictly convex, so its maximum over the simplex sits at a
    vertex; the best vertex is the shape of smallest sigma (largest area at
    full length). Ties go to the lowest index.
    """
    weights = [sigma(s) for s in problem.shapes]
    best = min(range(len(weights)), key=weights.__getitem__)
    lengths = [0.0] * len(weights)
    lengths[best] = problem.total_length
    return _result(VERTEX_MAXIMUM, problem, lengths)


def face_stationary(problem: PartitionProblem, excluded_index: int) -> PartitionResult:
    """Stationary point on the simplex face where one piece is pinned to zero.

    The remaining pieces follow the closed-form minimizer of the reduced
    problem, so this is the minimum over that face. With only two shapes the
    face degenerates to the opposite vertex.
    """
    count = len(problem.shapes)
    if isinstance(excluded_index, bool) or not isinstance(excluded_index, int):
        raise ValueError(f"excluded index must be an integer, got {excluded_index!r}")
    if not 0 <= excluded_index < count:
        raise ValueError(f"excluded index {excluded_index} out of range for {count} shapes")
    weights = [sigma(s) for s in problem.shapes]
    denom = sum(w for i, w in enumerate(weights) if i != excluded_index)
    scale = problem.total_length / denom
    lengths = [w * scale for w in weights]
    lengths[excluded_index] = 0.0
    return _result(FACE_STATIONARY, problem, lengths, excluded_index)


def paper_face_max(problem: PartitionProblem) -> PartitionResult:
    """Largest face-stationary total over all choices of pinned piece.

    Kept as a boundary diagnostic: every face point is dominated by the
    vertex maximum, so this is a lower bound on maximize_partition, not the
    maximum itself. Ties go to the lowest excluded index.
    """
    best = None
    for b in range(len(problem.shapes)):
        candidate = face_stationary(problem, b)
        if best is None or candidate.total_area > best.total_area:
            best = candidate
    return best
