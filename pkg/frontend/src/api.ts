/**
 * The one place that knows the endpoint contract. Every view talks to the
 * backend through this client; nothing else in the app calls fetch.
 */

import type {
  AssessmentResponse,
  CatalogResponse,
  EvolutionDoc,
  SubmissionBody,
} from './types';

/** A non-2xx response carrying the API's structured error body. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
    readonly path: string | null,
  ) {
    super(detail);
    this.name = 'ApiError';
  }
}

/**
 * Resolve the API base URL at runtime: a global set by the hosting page wins,
 * then a <meta name="api-base"> tag, else same-origin relative paths.
 */
export function apiBaseUrl(): string {
  const fromGlobal = (globalThis as Record<string, unknown>)['CSRE4SOC_API_BASE'];
  if (typeof fromGlobal === 'string') return fromGlobal.replace(/\/$/, '');
  const meta = document.querySelector('meta[name="api-base"]');
  const content = meta?.getAttribute('content');
  if (content) return content.replace(/\/$/, '');
  return '';
}

export class ApiClient {
  constructor(private readonly baseUrl: string = '') {}

  getCatalog(signal?: AbortSignal): Promise<CatalogResponse> {
    return this.request('GET', '/api/v1/catalog', undefined, signal);
  }

  submitAssessment(body: SubmissionBody, signal?: AbortSignal): Promise<AssessmentResponse> {
    return this.request('POST', '/api/v1/assessments', body, signal);
  }

  getEvolution(companyId: string, signal?: AbortSignal): Promise<EvolutionDoc> {
    return this.request(
      'GET',
      `/api/v1/companies/${encodeURIComponent(companyId)}/evolution`,
      undefined,
      signal,
    );
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      signal,
      headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let parsed: Partial<import('./types').ApiErrorBody> = {};
      try {
        parsed = await response.json();
      } catch {
        // non-JSON error body: fall through to the generic message
      }
      throw new ApiError(
        response.status,
        parsed.code ?? 'unknown',
        parsed.detail ?? `request failed with status ${response.status}`,
        parsed.path ?? null,
      );
    }
    return (await response.json()) as T;
  }
}

/** RFC 3339 UTC instant at second precision, as the API expects. */
export function nowTimestamp(): string {
  return new Date().toISOString().replace(/\.\d+Z$/, 'Z');
}
