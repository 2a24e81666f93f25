"""Frames of discernment, basic probability assignments, and Dempster's rule.

Focal sets are bitmasks over the frame's hypothesis indices, so the
combination rule works for arbitrary subsets, not just singletons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

_TOTAL_CONFLICT_EPS = 1e-12


class TotalConflictError(ValueError):
    """Combination is undefined: the two operands conflict completely."""

    def __init__(self, message: str, left: object = None, right: object = None):
        super().__init__(message)
        self.left = left
        self.right = right


@dataclass(frozen=True)
class Frame:
    """Ordered, distinct hypothesis labels; subsets are bitmasks over them."""

    hypotheses: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        if not self.hypotheses:
            raise ValueError("a frame needs at least one hypothesis")
        if len(set(self.hypotheses)) != len(self.hypotheses):
            raise ValueError("hypothesis labels must be distinct")

    def __len__(self) -> int:
        return len(self.hypotheses)

    @property
    def theta(self) -> int:
        """Bitmask of the whole frame."""
        return (1 << len(self.hypotheses)) - 1

    def index(self, label: str) -> int:
        try:
            return self.hypotheses.index(label)
        except ValueError:
            raise ValueError(f"unknown hypothesis {label!r}") from None

    def singleton(self, label: str) -> int:
        return 1 << self.index(label)

    def subset(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= self.singleton(label)
        return mask

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(h for i, h in enumerate(self.hypotheses) if mask >> i & 1)


@dataclass(frozen=True)
class MassFunction:
    """A basic probability assignment: mass per focal set, summing to one.

    Zero-mass entries are dropped at construction, so equal assignments
    compare equal regardless of how they were written down.
    """

    frame: Frame
    masses: dict[int, float]

    def __post_init__(self) -> None:
        cleaned: dict[int, float] = {}
        for mask, value in self.masses.items():
            value = float(value)
            if value < 0.0:
                raise ValueError(f"masses must be nonnegative, got {value}")
            if value == 0.0:
                continue
            if mask == 0:
                raise ValueError("the empty set must carry no mass")
            if not 0 < mask <= self.frame.theta:
                raise ValueError(f"focal set {mask:#x} is outside the frame")
            cleaned[mask] = cleaned.get(mask, 0.0) + value
        if abs(math.fsum(cleaned.values()) - 1.0) > 1e-12:
            raise ValueError("masses must sum to 1")
        object.__setattr__(self, "masses", cleaned)

    @classmethod
    def from_items(
        cls, frame: Frame, items: Mapping[str | tuple[str, ...], float]
    ) -> "MassFunction":
        """Build from labels: a key is one hypothesis or a tuple of them."""
        masses: dict[int, float] = {}
        for key, value in items.items():
            labels = (key,) if isinstance(key, str) else tuple(key)
            mask = frame.subset(labels)
            masses[mask] = masses.get(mask, 0.0) + value
        return cls(frame, masses)

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        """Total ignorance: all mass on the whole frame."""
        return cls(frame, {frame.theta: 1.0})

    def mass(self, key: str | Iterable[str]) -> float:
        labels = (key,) if isinstance(key, str) else tuple(key)
        return self.masses.get(self.frame.subset(labels), 0.0)

    def theta_mass(self) -> float:
        return self.masses.get(self.frame.theta, 0.0)

    def singleton_masses(self) -> dict[str, float]:
        """Mass of each hypothesis on its own, zero where not focal."""
        return {h: self.masses.get(1 << i, 0.0) for i, h in enumerate(self.frame.hypotheses)}

    def focal_items(self) -> list[tuple[tuple[str, ...], float]]:
        """(labels, mass) pairs in deterministic bitmask order."""
        return [(self.frame.labels(m), v) for m, v in sorted(self.masses.items())]

    def is_vacuous(self) -> bool:
        return self.masses == {self.frame.theta: 1.0}


@dataclass(frozen=True)
class CombinationOutcome:
    """A combined mass function plus the conflict seen along the way.

    conflict is the k of the final pairwise step; steps holds one k per
    fold step when several functions were combined.
    """

    combined: MassFunction
    conflict: float
    steps: tuple[float, ...] = ()


def bpa_from_similarities(frame: Frame, scores: Sequence[float]) -> MassFunction:
    """Turn per-hypothesis similarities into a BPA over the frame.

    Each hypothesis gets its similarity as a pre-mass; the residual
    1 - max(scores) goes to the whole frame, then everything is normalized.
    All-zero scores therefore collapse to the vacuous assignment, and a
    perfect score leaves no residual ignorance.
    """
    if len(scores) != len(frame):
        raise ValueError(
            f"expected {len(frame)} scores for frame {frame.hypotheses}, got {len(scores)}"
        )
    for s in scores:
        if not 0.0 <= s <= 1.0:
            raise ValueError(f"similarities must lie in [0, 1], got {s}")
    residual = 1.0 - max(scores)
    total = math.fsum(scores) + residual
    masses = {1 << i: s / total for i, s in enumerate(scores)}
    masses[frame.theta] = masses.get(frame.theta, 0.0) + residual / total
    return MassFunction(frame, masses)


def dempster_combine(m1: MassFunction, m2: MassFunction) -> CombinationOutcome:
    """Dempster's rule: intersect focal sets, renormalize by 1 - k.

    Sums go through fsum, and the normalizer is the surviving product mass
    (identically 1 - k, but stable when k creeps toward 1), so the result
    does not depend on focal-set iteration order.  Raises
    TotalConflictError when k reaches 1 and nothing survives.
    """
    if m1.frame != m2.frame:
        raise ValueError("cannot combine mass functions over different frames")
    # total ignorance is the neutral element; skip the arithmetic so the
    # other operand comes back untouched
    if m1.is_vacuous():
        return CombinationOutcome(m2, 0.0, (0.0,))
    if m2.is_vacuous():
        return CombinationOutcome(m1, 0.0, (0.0,))
    buckets: dict[int, list[float]] = {}
    conflict_parts: list[float] = []
    for s1, v1 in m1.masses.items():
        for s2, v2 in m2.masses.items():
            product = v1 * v2
            inter = s1 & s2
            if inter:
                buckets.setdefault(inter, []).append(product)
            else:
                conflict_parts.append(product)
    k = math.fsum(conflict_parts)
    if k >= 1.0 - _TOTAL_CONFLICT_EPS:
        raise TotalConflictError(
            f"total conflict (k = {k}) between the two mass functions", left=0, right=1
        )
    totals = {mask: math.fsum(parts) for mask, parts in buckets.items()}
    survived = math.fsum(totals.values())
    combined = {mask: value / survived for mask, value in totals.items()}
    return CombinationOutcome(MassFunction(m1.frame, combined), k, (k,))


def combine_all(masses: Sequence[MassFunction]) -> CombinationOutcome:
    """Left fold of dempster_combine over one or more mass functions.

    A single input comes back unchanged with zero conflict.  On total
    conflict the error names which input clashed with the running fold.
    """
    if not masses:
        raise ValueError("need at least one mass function to combine")
    acc = masses[0]
    steps: list[float] = []
    for i, m in enumerate(masses[1:], start=1):
        try:
            outcome = dempster_combine(acc, m)
        except TotalConflictError as err:
            raise TotalConflictError(
                f"total conflict combining input {i} into the fold of inputs 0..{i - 1}",
                left=i - 1,
                right=i,
            ) from err
        acc = outcome.combined
        steps.append(outcome.conflict)
    return CombinationOutcome(acc, steps[-1] if steps else 0.0, tuple(steps))
