"""Area kernels for regular polygons and their circle limit.

Everything reduces to one weight per shape, ``sigma = n / tan(half_angle)``:
a shape of perimeter P encloses area P**2 / (4 * sigma), so a small sigma
marks an efficient encloser. The circle is a distinct variant rather than a
huge-n polygon, which keeps its limiting values (sigma = pi, area =
P**2 / (4*pi)) exact instead of suffering cancellation in tan near pi/2.
"""

import math
from dataclasses import dataclass

__all__ = [
    "Shape",
    "CIRCLE",
    "regular",
    "parse_shape",
    "half_angle",
    "apothem",
    "area",
    "sigma",
]


@dataclass(frozen=True)
class Shape:
    """A regular polygon with ``sides >= 3``, or the circle limit (``sides=None``)."""

    sides: int | None

    def __post_init__(self):
        if self.sides is None:
            return
        if isinstance(self.sides, bool) or not isinstance(self.sides, int):
            raise ValueError(f"side count must be an integer, got {self.sides!r}")
        if self.sides < 3:
            raise ValueError(f"a polygon needs at least 3 sides, got {self.sides}")

    @property
    def is_circle(self) -> bool:
        return self.sides is None

    def __str__(self) -> str:
        return "circle" if self.sides is None else str(self.sides)


CIRCLE = Shape(None)


def regular(sides: int) -> Shape:
    """Regular polygon with the given number of sides."""
    return Shape(sides)


def parse_shape(token: "int | float | str | Shape") -> Shape:
    """Parse the problem-file encoding: an integer >= 3 or the literal ``"circle"``."""
    if isinstance(token, Shape):
        return token
    if isinstance(token, str):
        text = token.strip().lower()
        if text == "circle":
            return CIRCLE
        try:
            sides = int(text)
        except ValueError:
            raise ValueError(
                f"shape must be an integer side count or 'circle', got {token!r}"
            ) from None
        return Shape(sides)
    if isinstance(token, bool):
        raise ValueError(f"shape must be an integer side count or 'circle', got {token!r}")
    if isinstance(token, int):
        return Shape(token)
    if isinstance(token, float) and token.is_integer():
        return Shape(int(token))
    raise ValueError(f"shape must be an integer side count or 'circle', got {token!r}")


def half_angle(shape: Shape) -> float:
    """Half the interior angle in radians: (1/2 - 1/n)*pi, or pi/2 for the circle."""
    if shape.is_circle:
        return math.pi / 2.0
    return (0.5 - 1.0 / shape.sides) * math.pi


def sigma(shape: Shape) -> float:
    """The weight n / tan(half_angle); pi for the circle.

    Evaluated as ``n * tan(pi/n)``, the same number in a form that stays
    well-conditioned for very large side counts.
    """
    if shape.is_circle:
        return math.pi
    n = shape.sides
    return n * math.tan(math.pi / n)


def apothem(shape: Shape, perimeter: float) -> float:
    """Center-to-side distance at the given perimeter (the radius for a circle)."""
    _check_perimeter(perimeter)
    return perimeter / (2.0 * sigma(shape))


def area(shape: Shape, perimeter: float) -> float:
    """Enclosed area at the given perimeter; zero perimeter means zero area."""
    _check_perimeter(perimeter)
    return perimeter * perimeter / (4.0 * sigma(shape))


def _check_perimeter(perimeter):
    if not (isinstance(perimeter, (int, float)) and math.isfinite(perimeter)) or perimeter < 0:
        raise ValueError(f"perimeter must be a finite non-negative number, got {perimeter!r}")
