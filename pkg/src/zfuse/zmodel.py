"""Z-numbers, the linguistic lexicon, and ranking by deviation from the ideal.

A Z-number pairs an evaluation A with a reliability judgement B, both
trapezoidal fuzzy numbers.  Each component is condensed to a scalar ranking
score H, and the pair is scored by its weighted distance from the ideal
(H = 1 on both components), normalized so the all-zero Z-number lands at 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .fuzzy import TrapezoidalFuzzyNumber, score_factors
from .owa import DEFAULT_ALPHA, WeightVector, mem_weights


@dataclass(frozen=True)
class ZNumber:
    """Evaluation A constrained by reliability B."""

    A: TrapezoidalFuzzyNumber
    B: TrapezoidalFuzzyNumber


@dataclass(frozen=True)
class LinguisticTerm:
    name: str
    shape: TrapezoidalFuzzyNumber


LEXICON: tuple[LinguisticTerm, ...] = (
    LinguisticTerm("Absolutely-low", TrapezoidalFuzzyNumber(0.0, 0.0, 0.0, 0.0)),
    LinguisticTerm("Very-low", TrapezoidalFuzzyNumber(0.0, 0.0, 0.02, 0.07)),
    LinguisticTerm("Low", TrapezoidalFuzzyNumber(0.04, 0.1, 0.18, 0.23)),
    LinguisticTerm("Fairly-low", TrapezoidalFuzzyNumber(0.17, 0.22, 0.36, 0.42)),
    LinguisticTerm("Medium", TrapezoidalFuzzyNumber(0.32, 0.41, 0.58, 0.65)),
    LinguisticTerm("Fairly-high", TrapezoidalFuzzyNumber(0.58, 0.63, 0.8, 0.86)),
    LinguisticTerm("High", TrapezoidalFuzzyNumber(0.72, 0.78, 0.92, 0.97)),
    LinguisticTerm("Very-high", TrapezoidalFuzzyNumber(0.93, 0.98, 1.0, 1.0)),
    LinguisticTerm("Absolutely-high", TrapezoidalFuzzyNumber(1.0, 1.0, 1.0, 1.0)),
)


def _normalize_term(name: str) -> str:
    return "-".join(name.replace("_", " ").replace("-", " ").casefold().split())


_TERMS_BY_KEY = {_normalize_term(term.name): term for term in LEXICON}


def linguistic_term(name: str) -> LinguisticTerm:
    """Look up a lexicon term; case, hyphens, and underscores do not matter."""
    term = _TERMS_BY_KEY.get(_normalize_term(name))
    if term is None:
        known = ", ".join(t.name for t in LEXICON)
        raise ValueError(f"unknown linguistic term {name!r}; expected one of: {known}")
    return term


def ranking_score(f: TrapezoidalFuzzyNumber, weights: WeightVector | None = None) -> float:
    """Scalar score H(f): OWA blend of centroid, height, and compactness.

    The three factors are taken in that fixed order of importance, not
    sorted by value, so the blend stays monotone in each factor.
    """
    if weights is None:
        weights = mem_weights(3, DEFAULT_ALPHA)
    if len(weights) != 3:
        raise ValueError(f"ranking needs a length-3 weight vector, got {len(weights)}")
    sf = score_factors(f)
    return weights[0] * sf.x + weights[1] * sf.h + weights[2] * sf.compact


def rank_fuzzy(
    numbers: Sequence[TrapezoidalFuzzyNumber],
    weights: WeightVector | None = None,
) -> list[int]:
    """Indices of numbers ordered best first; ties keep input order."""
    if not numbers:
        raise ValueError("nothing to rank")
    scores = [ranking_score(f, weights) for f in numbers]
    return sorted(range(len(numbers)), key=lambda i: -scores[i])


_IDEAL = TrapezoidalFuzzyNumber(1.0, 1.0, 1.0, 1.0)
_WORST = TrapezoidalFuzzyNumber(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class ReferenceBounds:
    """The ideal and anti-ideal Z-numbers with their component scores.

    hmax and hmin are the H scores of the ideal's and anti-ideal's
    components under score_weights; deviations are normalized against them.
    """

    zmax: ZNumber
    zmin: ZNumber
    hmax: float
    hmin: float
    score_weights: WeightVector

    @classmethod
    def from_weights(cls, score_weights: WeightVector) -> "ReferenceBounds":
        return cls(
            zmax=ZNumber(_IDEAL, _IDEAL),
            zmin=ZNumber(_WORST, _WORST),
            hmax=ranking_score(_IDEAL, score_weights),
            hmin=ranking_score(_WORST, score_weights),
            score_weights=score_weights,
        )

    @classmethod
    def from_alpha(cls, alpha: float = DEFAULT_ALPHA) -> "ReferenceBounds":
        return cls.from_weights(mem_weights(3, alpha))


@dataclass(frozen=True)
class ZScore:
    """Component scores and the resulting deviation/similarity of a Z-number.

    clamped flags a raw deviation beyond 1 (possible for shapes far outside
    the unit interval) that was cut back to the nominal range.
    """

    hA: float
    hB: float
    deviation: float
    similarity: float
    clamped: bool = False


def score_znumber(
    z: ZNumber,
    component_weights: WeightVector | None = None,
    refs: ReferenceBounds | None = None,
) -> ZScore:
    """Deviation of z from the ideal and the complementary similarity.

    Deviation is the component-weighted root mean square distance of
    (H(A), H(B)) from the ideal point, scaled so the anti-ideal scores
    exactly 1.  Pass component_weights and refs built from the same alpha.
    """
    if component_weights is None:
        component_weights = mem_weights(2, DEFAULT_ALPHA)
    if refs is None:
        refs = ReferenceBounds.from_alpha(DEFAULT_ALPHA)
    if len(component_weights) != 2:
        raise ValueError(
            f"component blending needs a length-2 weight vector, got {len(component_weights)}"
        )
    w1, w2 = component_weights
    h_a = ranking_score(z.A, refs.score_weights)
    h_b = ranking_score(z.B, refs.score_weights)
    num = w1 * (h_a - refs.hmax) ** 2 + w2 * (h_b - refs.hmax) ** 2
    den = w1 * (refs.hmin - refs.hmax) ** 2 + w2 * (refs.hmin - refs.hmax) ** 2
    dev = math.sqrt(num / den)
    clamped = dev > 1.0
    if clamped:
        dev = 1.0
    return ZScore(hA=h_a, hB=h_b, deviation=dev, similarity=1.0 - dev, clamped=clamped)


def deviation(
    z: ZNumber,
    component_weights: WeightVector | None = None,
    refs: ReferenceBounds | None = None,
) -> float:
    return score_znumber(z, component_weights, refs).deviation


def similarity(
    z: ZNumber,
    component_weights: WeightVector | None = None,
    refs: ReferenceBounds | None = None,
) -> float:
    return score_znumber(z, component_weights, refs).similarity


def rank_znumbers(
    znumbers: Sequence[ZNumber],
    component_weights: WeightVector | None = None,
    refs: ReferenceBounds | None = None,
) -> list[tuple[int, float]]:
    """(index, similarity) pairs ordered best first; ties keep input order."""
    if not znumbers:
        raise ValueError("nothing to rank")
    sims = [similarity(z, component_weights, refs) for z in znumbers]
    order = sorted(range(len(znumbers)), key=lambda i: -sims[i])
    return [(i, sims[i]) for i in order]
