/** Shared fixtures and a routing fetch stub for view tests. */

import { vi } from 'vitest';
import { startApp } from '../src/app';
import { ApiClient } from '../src/api';
import type {
  AssessmentResponse,
  CatalogDocument,
  EvolutionDoc,
} from '../src/types';

export const CATALOG: CatalogDocument = {
  catalog_version: 'fixture-1',
  thresholds: [0.25, 0.5, 0.75, 1],
  dimensions: [
    {
      id: 'human',
      name: 'Human',
      actions: [
        { id: 'hum-01', statement: 'Workload is monitored.', weight: 1, recommendation: 'Monitor workload.' },
        { id: 'hum-02', statement: 'Accessibility is ensured.', weight: 1, recommendation: 'Ensure accessibility.' },
      ],
    },
    {
      id: 'economic',
      name: 'Economic',
      actions: [
        { id: 'eco-01', statement: 'Costs are tracked.', weight: 1, recommendation: 'Track costs.' },
      ],
    },
    {
      id: 'environmental',
      name: 'Environmental',
      actions: [
        { id: 'env-01', statement: 'Energy use is collected.', weight: 1, recommendation: 'Collect energy use.' },
        { id: 'env-02', statement: 'KW/h is reduced.', weight: 1, recommendation: 'Reduce KW/h.' },
      ],
    },
  ],
};

/** Deliberately non-default labels: proves the UI copies, never computes. */
export const ASSESSMENT: AssessmentResponse = {
  record_id: 'rec-test-1',
  result: {
    scores: [
      { dimension: 'human', coverage: '1/2', level: { ordinal: 3, label: 'Halfway Hero' }, implemented_count: 1, total_count: 2 },
      { dimension: 'economic', coverage: '0', level: { ordinal: 1, label: 'Rock Bottom' }, implemented_count: 0, total_count: 1 },
      { dimension: 'environmental', coverage: '1', level: { ordinal: 5, label: 'Green Giant' }, implemented_count: 2, total_count: 2 },
    ],
    overall: { ordinal: 1, label: 'Rock Bottom' },
    catalog_digest: 'digest-a',
  },
  recommendations: [
    { action_id: 'hum-02', dimension: 'human', text: 'Ensure accessibility.' },
    { action_id: 'eco-01', dimension: 'economic', text: 'Track costs.' },
  ],
};

export const EVOLUTION: EvolutionDoc = {
  company_id: 'acme-soft',
  points: [
    { timestamp: '2026-01-10T08:00:00Z', levels: { human: 1, economic: 1, environmental: 2 }, overall: 1, catalog_digest_changed: false },
    { timestamp: '2026-04-10T08:00:00Z', levels: { human: 2, economic: 3, environmental: 3 }, overall: 2, catalog_digest_changed: true },
    { timestamp: '2026-07-10T08:00:00Z', levels: { human: 3, economic: 3, environmental: 4 }, overall: 3, catalog_digest_changed: false },
  ],
};

export interface StubRoute {
  status: number;
  body: unknown;
}

export type StubTable = Record<string, StubRoute | ((init?: RequestInit) => StubRoute)>;

/** Install a fetch stub; keys are "METHOD path". Returns the mock for spying. */
export function stubApi(routes: StubTable) {
  const mock = vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const method = init?.method ?? 'GET';
    const path = url.replace(/^https?:\/\/[^/]+/, '');
    const key = `${method} ${path}`;
    const route = routes[key];
    if (!route) {
      return new Response(
        JSON.stringify({ status: 404, code: 'not_found', detail: `no stub for ${key}`, path: null }),
        { status: 404, headers: { 'Content-Type': 'application/json' } },
      );
    }
    const resolved = typeof route === 'function' ? route(init) : route;
    return new Response(JSON.stringify(resolved.body), {
      status: resolved.status,
      headers: { 'Content-Type': 'application/json' },
    });
  });
  vi.stubGlobal('fetch', mock);
  return mock;
}

/** Mount the app fresh against the stubbed API and wait for first paint. */
export function mountApp() {
  document.body.innerHTML = '<div id="root"></div>';
  window.location.hash = '';
  const root = document.getElementById('root')!;
  const ctx = startApp(root, new ApiClient(''));
  return { root, ctx };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
