"""Generalized trapezoidal fuzzy numbers and their three scoring factors.

A value is described by the tuple (a, b, c, d; w): membership rises linearly
on [a, b], stays flat at height w on [b, c], and falls linearly on [c, d].
Any segment may have zero width, down to a point number a = b = c = d.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass


@dataclass(frozen=True)
class TrapezoidalFuzzyNumber:
    """Trapezoid vertices (a, b, c, d) plus plateau height w in (0, 1]."""

    a: float
    b: float
    c: float
    d: float
    w: float = 1.0

    def __post_init__(self) -> None:
        if not (self.a <= self.b <= self.c <= self.d):
            raise ValueError(
                "vertices must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )
        if not 0.0 < self.w <= 1.0:
            raise ValueError(f"height must satisfy 0 < w <= 1, got {self.w}")

    @property
    def vertices(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def is_point(self) -> bool:
        """True when all four vertices coincide."""
        return self.a == self.d


@dataclass(frozen=True)
class ScoreFactors:
    """The three ranking ingredients of a fuzzy number, importance-ordered.

    x is the centroid abscissa, h the height, and compact = 1 / (1 + std)
    rewards tight numbers; std is kept alongside for reporting.
    """

    x: float
    h: float
    std: float
    compact: float


def membership(f: TrapezoidalFuzzyNumber, x: float) -> float:
    """Membership grade of x, in [0, w].

    Zero outside [a, d], w on the plateau [b, c], linear on the ramps.  A
    zero-width ramp jumps straight to w at its boundary point.
    """
    if x < f.a or x > f.d:
        return 0.0
    if f.b <= x <= f.c:
        return f.w
    if x < f.b:
        return (x - f.a) / (f.b - f.a) * f.w
    return (f.d - x) / (f.d - f.c) * f.w


def centroid(f: TrapezoidalFuzzyNumber) -> float:
    """Defuzzified value: abscissa of the area centroid of the membership.

    Closed-form piecewise integration; zero-width segments contribute
    nothing.  The height cancels, so the result is independent of w.  A
    point number has no area and defuzzifies to its single vertex.
    """
    if f.is_point():
        return f.a
    area = 0.0
    moment = 0.0
    if f.b > f.a:
        piece = (f.b - f.a) / 2.0
        area += piece
        moment += piece * (f.a + 2.0 * f.b) / 3.0
    if f.c > f.b:
        piece = f.c - f.b
        area += piece
        moment += piece * (f.b + f.c) / 2.0
    if f.d > f.c:
        piece = (f.d - f.c) / 2.0
        area += piece
        moment += piece * (2.0 * f.c + f.d) / 3.0
    return moment / area


def spread(f: TrapezoidalFuzzyNumber) -> float:
    """Sample standard deviation of the four vertices (divisor 3)."""
    return statistics.stdev(f.vertices)


def score_factors(f: TrapezoidalFuzzyNumber) -> ScoreFactors:
    """Bundle centroid, height, and spread of f for ranking."""
    std = spread(f)
    return ScoreFactors(
        x=centroid(f),
        h=f.w,
        std=std,
        compact=1.0 / (1.0 + std),
    )
