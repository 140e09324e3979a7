"""csre4soc: a catalog-driven scorecard for software-sustainability CSR actions.

A company declares which catalog actions its CSR implements; the scorecard
computes per-dimension coverage, maps it to ordinal levels, recommends every
action still missing, and keeps an append-only history so the level evolution
can be tracked across re-assessments.
"""

from .catalog import (
    ActionCatalog,
    ActionItem,
    AssessmentSubmission,
    Dimension,
    DimensionId,
    DIMENSION_ORDER,
    catalog_digest,
    catalog_doc,
    default_catalog_path,
    load_catalog,
    load_default_catalog,
    parse_catalog,
    parse_submission,
    serialize_catalog,
    validate_submission,
)
from .errors import (
    DuplicateRecordId,
    EmptyCompanyId,
    InvariantViolation,
    MalformedDocument,
    SchemaViolation,
    ScorecardError,
    StorageFailure,
    UnknownActionId,
)
from .history import (
    AssessmentRecord,
    EvolutionPoint,
    EvolutionSeries,
    RecordStore,
    evolution_doc,
)
from .recommendations import Recommendation, recommend
from .scoring import (
    AssessmentResult,
    DimensionScore,
    SustainabilityLevel,
    assess,
    level_from_coverage,
    result_doc,
    weighted_coverage,
)

__version__ = "0.1.0"

__all__ = [
    "ActionCatalog",
    "ActionItem",
    "AssessmentRecord",
    "AssessmentResult",
    "AssessmentSubmission",
    "Dimension",
    "DimensionId",
    "DIMENSION_ORDER",
    "DimensionScore",
    "DuplicateRecordId",
    "EmptyCompanyId",
    "EvolutionPoint",
    "EvolutionSeries",
    "InvariantViolation",
    "MalformedDocument",
    "Recommendation",
    "RecordStore",
    "SchemaViolation",
    "ScorecardError",
    "StorageFailure",
    "SustainabilityLevel",
    "UnknownActionId",
    "assess",
    "catalog_digest",
    "catalog_doc",
    "default_catalog_path",
    "evolution_doc",
    "level_from_coverage",
    "load_catalog",
    "load_default_catalog",
    "parse_catalog",
    "parse_submission",
    "recommend",
    "result_doc",
    "serialize_catalog",
    "validate_submission",
    "weighted_coverage",
    "__version__",
]
