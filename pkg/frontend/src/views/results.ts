/**
 * Results view: the level chart plus grouped recommendations for the
 * assessment that was just submitted. Every displayed level string is
 * copied verbatim from the API response — no arithmetic here.
 */

import { levelsBarChart } from '../charts';
import { clear, el } from '../dom';
import type { AppContext } from '../app';
import { DIMENSION_ORDER, type RecommendationDoc } from '../types';

export function renderResults(root: HTMLElement, ctx: AppContext): void {
  clear(root);
  const last = ctx.state.lastAssessment;
  if (!last) {
    root.append(
      el('h1', {}, 'Results'),
      el('p', { class: 'empty-state' }, 'No assessment yet — fill in the questionnaire first.'),
      el('a', { href: '#/questionnaire' }, 'Go to the questionnaire'),
    );
    return;
  }

  const { response, catalog } = last;
  const names = new Map(catalog.dimensions.map((d) => [d.id, d.name]));
  const maxLevel = catalog.thresholds.length + 1;

  const scoreRows = response.result.scores.map((score) =>
    el('tr', { 'data-dimension-row': score.dimension },
      el('td', {}, names.get(score.dimension) ?? score.dimension),
      el('td', { class: 'level-cell', 'data-level': score.dimension },
        `L${score.level.ordinal} ${score.level.label}`),
      el('td', {}, `${score.implemented_count} of ${score.total_count} actions`),
      el('td', {}, coverageText(score.coverage)),
    ));

  root.append(
    el('h1', {}, `Results for ${response.record_id}`),
    levelsBarChart(response.result.scores, response.result.overall, maxLevel),
    el('p', { class: 'overall', 'data-level': 'overall' },
      `Overall level: L${response.result.overall.ordinal} ${response.result.overall.label}`),
    el('table', { class: 'scores' },
      el('thead', {}, el('tr', {},
        el('th', {}, 'Dimension'), el('th', {}, 'Level'),
        el('th', {}, 'Implemented'), el('th', {}, 'Coverage'))),
      el('tbody', {}, ...scoreRows)),
    renderRecommendations(response.recommendations, names),
    el('p', {},
      el('a', { href: '#/questionnaire' }, 'Assess again'),
      ' · ',
      el('a', { href: '#/evolution' }, 'See evolution')),
  );
}

function renderRecommendations(
  recommendations: RecommendationDoc[],
  names: Map<string, string>,
): HTMLElement {
  if (recommendations.length === 0) {
    return el('p', { class: 'empty-state', 'data-recommendations': 'empty' },
      'Nothing left to recommend: every catalog action is implemented.');
  }
  const groups = DIMENSION_ORDER.flatMap((dimId) => {
    const inDimension = recommendations.filter((r) => r.dimension === dimId);
    if (inDimension.length === 0) return [];
    return [
      el('section', { class: 'recommendation-group', 'data-recommendations': dimId },
        el('h3', {}, names.get(dimId) ?? dimId),
        el('ul', {}, ...inDimension.map((r) =>
          el('li', { 'data-recommendation': r.action_id }, r.text)))),
    ];
  });
  return el('section', { class: 'recommendations' },
    el('h2', {}, `Recommended improvement actions (${recommendations.length})`),
    ...groups);
}

/** "1/2" -> "1/2 (50%)" for display; the exact string stays visible. */
function coverageText(coverage: string): string {
  const [num, den] = coverage.split('/');
  const value = den === undefined ? Number(num) : Number(num) / Number(den);
  return `${coverage} (${Math.round(value * 100)}%)`;
}
