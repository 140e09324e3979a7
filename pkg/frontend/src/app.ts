/**
 * Hash-routed single-page app with three views mirroring the assessment
 * workflow: questionnaire -> results -> evolution.
 */

import { ApiClient, apiBaseUrl } from './api';
import { clear, el } from './dom';
import { renderEvolution } from './views/evolution';
import { renderQuestionnaire } from './views/questionnaire';
import { renderResults } from './views/results';
import type { AssessmentResponse, CatalogDocument } from './types';

export type Route = 'questionnaire' | 'results' | 'evolution';

export interface AppState {
  lastAssessment?: { response: AssessmentResponse; catalog: CatalogDocument };
  lastCompanyId?: string;
}

export interface AppContext {
  api: ApiClient;
  state: AppState;
  navigate(route: Route): void;
}

const ROUTES: Route[] = ['questionnaire', 'results', 'evolution'];

function routeFromHash(hash: string): Route {
  const name = hash.replace(/^#\//, '');
  return (ROUTES as string[]).includes(name) ? (name as Route) : 'questionnaire';
}

export function startApp(root: HTMLElement, api: ApiClient = new ApiClient(apiBaseUrl())): AppContext {
  const state: AppState = {};
  let inflight: AbortController | null = null;

  const ctx: AppContext = {
    api,
    state,
    navigate(route: Route) {
      window.location.hash = `#/${route}`;
      render(route);
    },
  };

  const nav = el('nav', { class: 'topnav' },
    el('a', { href: '#/questionnaire', 'data-nav': 'questionnaire' }, 'Questionnaire'),
    el('a', { href: '#/results', 'data-nav': 'results' }, 'Results'),
    el('a', { href: '#/evolution', 'data-nav': 'evolution' }, 'Evolution'),
  );
  const main = el('main', { class: 'view' });
  clear(root);
  root.append(el('header', {}, el('strong', {}, 'CSR sustainability scorecard'), nav), main);

  function render(route: Route): void {
    // cancel-on-navigate: any fetch owned by the previous view dies here
    inflight?.abort();
    inflight = new AbortController();
    for (const link of nav.querySelectorAll('a')) {
      link.classList.toggle('active', link.dataset['nav'] === route);
    }
    switch (route) {
      case 'questionnaire':
        renderQuestionnaire(main, ctx, inflight.signal);
        break;
      case 'results':
        renderResults(main, ctx);
        break;
      case 'evolution':
        renderEvolution(main, ctx, inflight.signal);
        break;
    }
  }

  window.addEventListener('hashchange', () => render(routeFromHash(window.location.hash)));
  render(routeFromHash(window.location.hash));
  return ctx;
}

// Auto-start when loaded as the page's module entry point (not under test).
const rootElement = document.getElementById('app');
if (rootElement) {
  startApp(rootElement);
}
