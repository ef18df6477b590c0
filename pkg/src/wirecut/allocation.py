"""Optimal integer allocation of a fixed side budget across several wires.

Each wire of length L_i is bent into a regular polygon with n_i sides; the
n_i are positive integers with n_i >= 3 that must sum to a given budget I.
The search space is the set of integer compositions of I into parts >= 3,
which is scanned exhaustively: the continuous first-order conditions are a
nonlinear system with no closed form, so they are kept only as residual
diagnostics on the integer winner.
"""

import math
from dataclasses import dataclass

from .errors import InfeasibleBudgetError, ResourceLimitError
from .geometry import Shape, area

__all__ = [
    "AllocationProblem",
    "AllocationResult",
    "composition_count",
    "total_area_for_allocation",
    "optimize_allocation",
    "stationarity_term",
    "stationarity_residual",
]

# Largest number of compositions the exhaustive scan will attempt.
COMPOSITION_LIMIT = 10**8


@dataclass(frozen=True)
class AllocationProblem:
    """Wire lengths plus the total number of polygon sides to hand out."""

    wire_lengths: tuple[float, ...]
    side_budget: int

    def __post_init__(self):
        lengths = tuple(float(x) for x in self.wire_lengths)
        if len(lengths) < 2:
            raise ValueError("an allocation problem needs at least two wires")
        for x in lengths:
            if not math.isfinite(x) or x <= 0:
                raise ValueError(f"wire lengths must be positive finite numbers, got {x!r}")
        budget = self.side_budget
        if isinstance(budget, bool) or not isinstance(budget, int):
            raise ValueError(f"side budget must be an integer, got {budget!r}")
        if budget < 3 * len(lengths):
            raise InfeasibleBudgetError(
                f"budget {budget} cannot give {len(lengths)} wires 3 sides each"
            )
        object.__setattr__(self, "wire_lengths", lengths)


@dataclass(frozen=True)
class AllocationResult:
    """Winning side counts with per-wire areas and stationarity residuals."""

    sides: tuple[int, ...]
    per_wire_areas: tuple[float, ...]
    total_area: float
    residuals: tuple[float, ...]


def composition_count(wires: int, budget: int) -> int:
    """Number of ways to write budget as an ordered sum of `wires` parts >= 3."""
    return math.comb(budget - 2 * wires - 1, wires - 1)


def _check_sides(sides):
    for n in sides:
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValueError(f"side counts must be integers, got {n!r}")
        if n < 3:
            raise ValueError(f"every wire needs at least 3 sides, got {n}")


def total_area_for_allocation(lengths, sides) -> float:
    """Total enclosed area when wire i is bent into a regular sides[i]-gon."""
    lengths = tuple(lengths)
    sides = tuple(sides)
    if len(lengths) != len(sides):
        raise ValueError("need exactly one side count per wire")
    _check_sides(sides)
    return sum(area(Shape(n), x) for n, x in zip(sides, lengths))


def _compositions(budget: int, parts: int):
    """All compositions of budget into `parts` integers >= 3, lexicographically
    ascending, so the first maximum found is the lexicographically smallest."""
    if parts == 1:
        yield (budget,)
        return
    for head in range(3, budget - 3 * (parts - 1) + 1):
        for tail in _compositions(budget - head, parts - 1):
            yield (head,) + tail


def optimize_allocation(problem: AllocationProblem) -> AllocationResult:
    """Exhaustive scan of all feasible side assignments; returns the best.

    Ties go to the lexicographically smallest side sequence. Refuses scans
    beyond COMPOSITION_LIMIT compositions.
    """
    wires = len(problem.wire_lengths)
    if composition_count(wires, problem.side_budget) > COMPOSITION_LIMIT:
        raise ResourceLimitError(
            f"{composition_count(wires, problem.side_budget)} compositions "
            f"exceed the scan limit of {COMPOSITION_LIMIT}"
        )
    best_sides = None
    best_total = -math.inf
    for sides in _compositions(problem.side_budget, wires):
        total = total_area_for_allocation(problem.wire_lengths, sides)
        if total > best_total:
            best_sides = sides
            best_total = total
    areas = tuple(area(Shape(n), x) for n, x in zip(best_sides, problem.wire_lengths))
    residuals = stationarity_residual(problem.wire_lengths, best_sides)
    return AllocationResult(best_sides, areas, sum(areas), residuals)


def stationarity_term(side: float, length: float) -> float:
    """Per-wire score whose equality across wires marks a continuous optimum.

    With alpha = pi/side, the score is (alpha*length)**2 times
    (alpha/tan(alpha)**2 - 1/tan(alpha) + alpha); side may be fractional but
    must exceed 2 so that alpha < pi/2.
    """
    if not (isinstance(side, (int, float)) and math.isfinite(side)) or side <= 2:
        raise ValueError(f"side count must exceed 2, got {side!r}")
    if not (isinstance(length, (int, float)) and math.isfinite(length)) or length <= 0:
        raise ValueError(f"length must be a positive finite number, got {length!r}")
    alpha = math.pi / side
    cot = 1.0 / math.tan(alpha)
    return (alpha * length) ** 2 * (alpha * cot * cot - cot + alpha)


def stationarity_residual(lengths, sides) -> tuple[float, ...]:
    """Consecutive differences of the per-wire scores; near-zero entries mean
    the continuous first-order conditions approximately hold."""
    lengths = tuple(lengths)
    sides = tuple(sides)
    if len(lengths) != len(sides):
        raise ValueError("need exactly one side count per wire")
    terms = [stationarity_term(n, x) for n, x in zip(sides, lengths)]
    return tuple(terms[i] - terms[i + 1] for i in range(len(terms) - 1))
