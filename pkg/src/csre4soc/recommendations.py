"""Improvement recommendations: one per catalog action not yet implemented.

Deliberately 1:1 with no ranking — the recommendation text is whatever the
catalog author wrote for the unimplemented action, in deterministic catalog
order (dimensions in fixed order, then action order), so re-runs diff cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import DIMENSION_ORDER, ActionCatalog, AssessmentSubmission, DimensionId


@dataclass(frozen=True)
class Recommendation:
    action_id: str
    dimension: DimensionId
    text: str


def recommend(sub: AssessmentSubmission, cat: ActionCatalog) -> tuple[Recommendation, ...]:
    """Everything the company has not implemented, as improvement actions.

    Together with the implemented set this partitions the catalog's action
    ids: nothing is dropped, nothing appears twice.
    """
    out = []
    for dim_id in DIMENSION_ORDER:
        for action in cat.dimension(dim_id).actions:
            if action.id not in sub.implemented:
                out.append(
                    Recommendation(action_id=action.id, dimension=dim_id, text=action.recommendation)
                )
    return tuple(out)


def recommendations_doc(recs: tuple[Recommendation, ...]) -> list[dict]:
    return [
        {"action_id": r.action_id, "dimension": r.dimension.value, "text": r.text}
        for r in recs
    ]
