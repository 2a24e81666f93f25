"""End-to-end decision flow: a grid of Z-number assessments in, a ranking out.

Every source's row is scored against the ideal Z-number, turned into a BPA,
and the BPAs are fused with Dempster's rule.  Hypotheses are ranked by their
fused singleton mass.
"""

from __future__ import annotations

from dataclasses import dataclass

from .evidence import (
    Frame,
    MassFunction,
    TotalConflictError,
    bpa_from_similarities,
    combine_all,
)
from .fuzzy import TrapezoidalFuzzyNumber
from .owa import DEFAULT_ALPHA, WeightVector, mem_weights
from .zmodel import ReferenceBounds, ZNumber, similarity

_FULL_RELIABILITY = TrapezoidalFuzzyNumber(1.0, 1.0, 1.0, 1.0)


@dataclass(frozen=True)
class AssessmentMatrix:
    """A complete sources-by-hypotheses grid of Z-number assessments.

    Rows follow sources, columns follow frame.hypotheses.
    """

    frame: Frame
    sources: tuple[str, ...]
    cells: tuple[tuple[ZNumber, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "cells", tuple(tuple(row) for row in self.cells))
        if len(self.frame) < 2:
            raise ValueError("a decision needs at least two hypotheses")
        if not self.sources:
            raise ValueError("a decision needs at least one source")
        if len(self.cells) != len(self.sources):
            raise ValueError(
                f"got {len(self.cells)} rows for {len(self.sources)} sources"
            )
        for label, row in zip(self.sources, self.cells):
            if len(row) != len(self.frame):
                raise ValueError(
                    f"source {label!r} has {len(row)} cells, expected {len(self.frame)}"
                )

    def cell(self, source: str, hypothesis: str) -> ZNumber:
        row = self.sources.index(source)
        return self.cells[row][self.frame.index(hypothesis)]

    def transposed(self) -> "AssessmentMatrix":
        """Swap the roles of sources and hypotheses."""
        flipped = tuple(
            tuple(self.cells[i][j] for i in range(len(self.sources)))
            for j in range(len(self.frame))
        )
        return AssessmentMatrix(
            frame=Frame(self.sources),
            sources=self.frame.hypotheses,
            cells=flipped,
        )


@dataclass(frozen=True)
class DecisionReport:
    """Everything the fusion produced, plus the configuration that shaped it."""

    frame: Frame
    sources: tuple[str, ...]
    per_source_bpas: tuple[MassFunction, ...]
    fused: MassFunction
    conflict_trace: tuple[float, ...]
    ranking: tuple[str, ...]
    decision: str
    alpha: float
    score_weights: WeightVector
    component_weights: WeightVector


def source_bpas(matrix: AssessmentMatrix, alpha: float = DEFAULT_ALPHA) -> tuple[MassFunction, ...]:
    """One BPA per source: its row of similarities plus residual ignorance.

    Rows are independent of each other, so they can be scored in any order
    or concurrently.
    """
    component_weights = mem_weights(2, alpha)
    refs = ReferenceBounds.from_alpha(alpha)
    return tuple(
        bpa_from_similarities(
            matrix.frame, [similarity(z, component_weights, refs) for z in row]
        )
        for row in matrix.cells
    )


def decide(matrix: AssessmentMatrix, alpha: float = DEFAULT_ALPHA) -> DecisionReport:
    """Score, convert, and fuse an assessment matrix into a decision report.

    alpha is the single attitude knob: it fixes both the length-3 factor
    weights and the length-2 component weights.
    """
    score_weights = mem_weights(3, alpha)
    component_weights = mem_weights(2, alpha)

    bpas = source_bpas(matrix, alpha)
    try:
        outcome = combine_all(bpas)
    except TotalConflictError as err:
        left = matrix.sources[err.left] if isinstance(err.left, int) else err.left
        right = matrix.sources[err.right] if isinstance(err.right, int) else err.right
        raise TotalConflictError(
            f"assessments of {right!r} totally conflict with those of {left!r}"
            " (folded together with any earlier sources)",
            left=left,
            right=right,
        ) from err

    fused = outcome.combined
    singles = fused.singleton_masses()
    order = sorted(range(len(matrix.frame)), key=lambda j: -singles[matrix.frame.hypotheses[j]])
    ranking = tuple(matrix.frame.hypotheses[j] for j in order)
    return DecisionReport(
        frame=matrix.frame,
        sources=matrix.sources,
        per_source_bpas=bpas,
        fused=fused,
        conflict_trace=outcome.steps,
        ranking=ranking,
        decision=ranking[0],
        alpha=alpha,
        score_weights=score_weights,
        component_weights=component_weights,
    )


def strip_reliability(matrix: AssessmentMatrix) -> AssessmentMatrix:
    """Replace every reliability component with full confidence (1,1,1,1;1)."""
    rows = tuple(
        tuple(ZNumber(z.A, _FULL_RELIABILITY) for z in row) for row in matrix.cells
    )
    return AssessmentMatrix(frame=matrix.frame, sources=matrix.sources, cells=rows)
