"""Coverage computation and ordinal sustainability levels.

The default model: a dimension's coverage is the weighted fraction of its
actions the company has implemented, and the level is how many catalog
thresholds that coverage reaches, plus one. The overall level is the minimum
of the three dimension levels (weakest link) — improving anywhere never
hurts, and the overall figure only rises once the weakest dimension does.

All arithmetic is exact (fractions.Fraction); a coverage sitting precisely
on a threshold earns the higher level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .catalog import (
    DIMENSION_ORDER,
    ActionCatalog,
    AssessmentSubmission,
    Dimension,
    DimensionId,
    catalog_digest,
)
from .errors import SchemaViolation

# Labels for the default five-level model (four thresholds). Any other
# threshold count falls back to plain "Level N" labels.
DEFAULT_LEVEL_LABELS = ("Initial", "Basic", "Intermediate", "Advanced", "Leader")


@dataclass(frozen=True)
class SustainabilityLevel:
    ordinal: int
    label: str

    def __str__(self) -> str:
        return f"L{self.ordinal} {self.label}"


@dataclass(frozen=True)
class DimensionScore:
    dimension: DimensionId
    coverage: Fraction
    level: SustainabilityLevel
    implemented_count: int
    total_count: int


@dataclass(frozen=True)
class AssessmentResult:
    scores: tuple[DimensionScore, ...]  # one per dimension, fixed order
    overall: SustainabilityLevel
    catalog_digest: str

    def score_for(self, dim_id: DimensionId) -> DimensionScore:
        for score in self.scores:
            if score.dimension is dim_id:
                return score
        raise KeyError(dim_id)


def level_label(ordinal: int, level_count: int) -> str:
    if level_count == len(DEFAULT_LEVEL_LABELS):
        return DEFAULT_LEVEL_LABELS[ordinal - 1]
    return f"Level {ordinal}"


def make_level(ordinal: int, level_count: int) -> SustainabilityLevel:
    if not 1 <= ordinal <= level_count:
        raise ValueError(f"ordinal {ordinal} outside [1, {level_count}]")
    return SustainabilityLevel(ordinal=ordinal, label=level_label(ordinal, level_count))


def level_from_coverage(coverage: Fraction, thresholds: Sequence[Fraction]) -> SustainabilityLevel:
    """Map coverage to a level: one step up per threshold reached.

    Boundaries belong to the higher level: coverage exactly 0.25 under the
    default thresholds is already L2.
    """
    ordinal = 1 + sum(1 for t in thresholds if coverage >= t)
    return make_level(ordinal, len(thresholds) + 1)


def weighted_coverage(dim: Dimension, implemented: Iterable[str]) -> Fraction:
    """Weighted fraction of this dimension's actions that are implemented.

    Ids belonging to other dimensions are ignored; the caller is expected to
    have validated the submission against the whole catalog already.
    """
    implemented = set(implemented)
    achieved = sum((a.weight for a in dim.actions if a.id in implemented), Fraction(0))
    return achieved / dim.total_weight


def assess(sub: AssessmentSubmission, cat: ActionCatalog) -> AssessmentResult:
    """Score a validated submission: three dimension scores plus the overall.

    Pure and deterministic — the same submission and catalog always produce
    an identical result.
    """
    scores = []
    for dim_id in DIMENSION_ORDER:
        dim = cat.dimension(dim_id)
        coverage = weighted_coverage(dim, sub.implemented)
        scores.append(
            DimensionScore(
                dimension=dim_id,
                coverage=coverage,
                level=level_from_coverage(coverage, cat.thresholds),
                implemented_count=len(sub.implemented & dim.action_ids),
                total_count=len(dim.actions),
            )
        )
    overall_ordinal = min(score.level.ordinal for score in scores)
    return AssessmentResult(
        scores=tuple(scores),
        overall=make_level(overall_ordinal, cat.level_count),
        catalog_digest=catalog_digest(cat),
    )


# --- wire form ----------------------------------------------------------------

def result_doc(result: AssessmentResult) -> dict:
    """Document form shared byte-for-byte by the HTTP API and the CLI.

    Coverage travels as an exact lowest-terms rational string ("1/2", "0",
    "1") so stored results round-trip without floating-point drift.
    """
    return {
        "scores": [
            {
                "dimension": s.dimension.value,
                "coverage": str(s.coverage),
                "level": {"ordinal": s.level.ordinal, "label": s.level.label},
                "implemented_count": s.implemented_count,
                "total_count": s.total_count,
            }
            for s in result.scores
        ],
        "overall": {"ordinal": result.overall.ordinal, "label": result.overall.label},
        "catalog_digest": result.catalog_digest,
    }


def result_from_doc(doc: Any) -> AssessmentResult:
    """Rebuild a result from its document form (record store reload path)."""
    try:
        scores = tuple(
            DimensionScore(
                dimension=DimensionId(s["dimension"]),
                coverage=Fraction(s["coverage"]),
                level=SustainabilityLevel(int(s["level"]["ordinal"]), str(s["level"]["label"])),
                implemented_count=int(s["implemented_count"]),
                total_count=int(s["total_count"]),
            )
            for s in doc["scores"]
        )
        overall = SustainabilityLevel(int(doc["overall"]["ordinal"]), str(doc["overall"]["label"]))
        digest = doc["catalog_digest"]
        if not isinstance(digest, str):
            raise TypeError("catalog_digest must be a string")
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaViolation(f"invalid result document: {exc}", path="result") from exc
    return AssessmentResult(scores=scores, overall=overall, catalog_digest=digest)
