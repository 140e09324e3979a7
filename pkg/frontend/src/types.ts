/** Wire types mirroring the scorecard API's JSON documents. */

export type DimensionId = 'human' | 'economic' | 'environmental';

/** Fixed presentation order, independent of catalog file order. */
export const DIMENSION_ORDER: readonly DimensionId[] = ['human', 'economic', 'environmental'];

export interface CatalogAction {
  id: string;
  statement: string;
  weight: number;
  recommendation: string;
}

export interface CatalogDimension {
  id: DimensionId;
  name: string;
  actions: CatalogAction[];
}

export interface CatalogDocument {
  catalog_version: string;
  thresholds: number[];
  dimensions: CatalogDimension[];
}

export interface CatalogResponse {
  catalog: CatalogDocument;
  digest: string;
}

export interface LevelDoc {
  ordinal: number;
  label: string;
}

export interface ScoreDoc {
  dimension: DimensionId;
  /** exact rational string, e.g. "1/2", "0", "1" — never parsed into floats here */
  coverage: string;
  level: LevelDoc;
  implemented_count: number;
  total_count: number;
}

export interface ResultDoc {
  scores: ScoreDoc[];
  overall: LevelDoc;
  catalog_digest: string;
}

export interface RecommendationDoc {
  action_id: string;
  dimension: DimensionId;
  text: string;
}

export interface AssessmentResponse {
  record_id: string;
  result: ResultDoc;
  recommendations: RecommendationDoc[];
}

export interface SubmissionBody {
  company_id: string;
  timestamp: string;
  implemented: string[];
}

export interface EvolutionPointDoc {
  timestamp: string;
  levels: Record<DimensionId, number>;
  overall: number;
  catalog_digest_changed: boolean;
}

export interface EvolutionDoc {
  company_id: string;
  points: EvolutionPointDoc[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  detail: string;
  path: string | null;
}
