"""Ordered weighted averaging: maximal-entropy weight vectors for a target orness.

Among all weight vectors of length n whose orness equals alpha, the one with
maximal entropy (dispersion) has weights in geometric progression.  We solve
for the common ratio by bisection, since orness is strictly decreasing in it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from functools import lru_cache
from typing import Iterable, Iterator

DEFAULT_ALPHA = 0.7

_ORNESS_TOL = 1e-14
_MAX_BISECTIONS = 200


def orness(weights: Iterable[float]) -> float:
    """Attitude of a weight vector: 1 is max-like, 0.5 neutral, 0 min-like."""
    ws = list(weights)
    n = len(ws)
    if n < 2:
        raise ValueError("orness needs at least two weights")
    return math.fsum((n - i) * w for i, w in enumerate(ws, start=1)) / (n - 1)


def dispersion(weights: Iterable[float]) -> float:
    """Shannon entropy -sum w ln w of the weights, with 0 ln 0 taken as 0."""
    return -math.fsum(w * math.log(w) for w in weights if w > 0.0)


@dataclass(frozen=True)
class WeightVector:
    """An OWA weight vector tagged with the orness level it was built for."""

    weights: tuple[float, ...]
    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.weights) < 2:
            raise ValueError("a weight vector needs at least two entries")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        for w in self.weights:
            if not 0.0 <= w <= 1.0:
                raise ValueError(f"weights must lie in [0, 1], got {w}")
        if abs(math.fsum(self.weights) - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")
        if abs(orness(self.weights) - self.alpha) > 1e-9:
            raise ValueError("weights do not realize the declared orness")

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[float]:
        return iter(self.weights)

    def __getitem__(self, i: int) -> float:
        return self.weights[i]

    @property
    def dispersion(self) -> float:
        return dispersion(self.weights)


def _geometric(n: int, r: float) -> list[float]:
    # Weights proportional to r**i; r = 0 collapses onto the first entry
    # (0**0 == 1) and r = 1 is uniform.
    powers = [r**i for i in range(n)]
    total = math.fsum(powers)
    return [p / total for p in powers]


def _renormalized(ws: list[float]) -> tuple[float, ...]:
    # Pin the exact sum to 1.0 so that downstream convex blends of equal
    # inputs reproduce the input bit for bit.  The true residual is never
    # negative, but for near-corner alpha the leading weights can round to
    # a hair above 1, so floor the pinned entry at zero.
    ws = list(ws)
    ws[-1] = max(0.0, 1.0 - math.fsum(ws[:-1]))
    return tuple(ws)


def _complement(alpha: float) -> float:
    # 1 - alpha through the shortest decimal form, so that 0.7 pairs with
    # 0.3 rather than 0.30000000000000004; these weights are echoed in
    # reports and users expect the decimal complement.
    return float(Decimal(1) - Decimal(repr(alpha)))


@lru_cache(maxsize=None)
def mem_weights(n: int, alpha: float = DEFAULT_ALPHA) -> WeightVector:
    """Maximal-entropy OWA weights of length n with orness alpha.

    Corner cases are exact: alpha 1 or 0 puts all weight on the first or
    last position, alpha 0.5 is uniform, and n = 2 is (alpha, 1 - alpha).
    Vectors for alpha < 0.5 are the reverse of those for 1 - alpha.
    """
    if n < 2:
        raise ValueError("a weight vector needs at least two entries")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")

    if alpha == 1.0:
        return WeightVector((1.0,) + (0.0,) * (n - 1), alpha)
    if alpha == 0.0:
        return WeightVector((0.0,) * (n - 1) + (1.0,), alpha)
    if alpha == 0.5:
        return WeightVector(_renormalized([1.0 / n] * n), alpha)
    if n == 2:
        return WeightVector((alpha, _complement(alpha)), alpha)
    if alpha < 0.5:
        mirrored = mem_weights(n, 1.0 - alpha)
        return WeightVector(tuple(reversed(mirrored.weights)), alpha)

    # alpha in (0.5, 1): ratio r in (0, 1), orness strictly decreasing in r
    # from 1 down to 0.5.
    lo, hi = 0.0, 1.0
    ws = _geometric(n, 0.5)
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        ws = _geometric(n, mid)
        residual = orness(ws) - alpha
        if abs(residual) < _ORNESS_TOL:
            break
        if residual > 0.0:
            lo = mid
        else:
            hi = mid
        if not lo < 0.5 * (lo + hi) < hi:
            break
    return WeightVector(_renormalized(ws), alpha)
