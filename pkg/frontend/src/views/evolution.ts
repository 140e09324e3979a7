/**
 * Evolution view: fetches a company's level history and draws one line per
 * dimension plus the overall, with catalog-change markers.
 */

import { evolutionLineChart } from '../charts';
import { clear, el, errorBanner } from '../dom';
import type { AppContext } from '../app';
import type { EvolutionDoc } from '../types';

export function renderEvolution(root: HTMLElement, ctx: AppContext, signal: AbortSignal): void {
  clear(root);

  const output = el('div', { class: 'evolution-output' });
  const input = el('input', {
    type: 'text',
    id: 'evolution-company',
    placeholder: 'company id',
    value: ctx.state.lastCompanyId ?? '',
  });
  const button = el('button', { type: 'submit', class: 'primary' }, 'Show evolution');
  const form = el('form', { class: 'evolution-form' },
    el('label', { for: 'evolution-company' }, 'Company id'),
    input,
    button,
  );
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const companyId = input.value.trim();
    if (companyId !== '') void load(companyId);
  });

  root.append(el('h1', {}, 'Level evolution'), form, output);
  if (ctx.state.lastCompanyId) void load(ctx.state.lastCompanyId);

  async function load(companyId: string): Promise<void> {
    ctx.state.lastCompanyId = companyId;
    clear(output);
    output.append(el('p', { class: 'loading' }, 'Loading evolution…'));
    try {
      const series = await ctx.api.getEvolution(companyId, signal);
      renderSeries(series);
    } catch (error) {
      if (signal.aborted) return;
      clear(output);
      output.append(errorBanner(
        `Could not load the evolution: ${error instanceof Error ? error.message : String(error)}`,
        () => void load(companyId),
      ));
    }
  }

  function renderSeries(series: EvolutionDoc): void {
    clear(output);
    if (series.points.length === 0) {
      output.append(el('p', { class: 'empty-state', 'data-evolution': 'empty' },
        `No assessments recorded yet for “${series.company_id}”. ` +
        'Submit a questionnaire to start the history.'));
      return;
    }
    const maxLevel = Math.max(5, ...series.points.map((p) => p.overall),
      ...series.points.flatMap((p) => Object.values(p.levels)));
    output.append(
      el('p', {}, `${series.points.length} assessments for ${series.company_id}`),
      evolutionLineChart(series.points, maxLevel),
      legend(),
    );
  }

  function legend(): HTMLElement {
    return el('p', { class: 'legend' },
      el('span', { class: 'legend-human' }, 'human'), ' ',
      el('span', { class: 'legend-economic' }, 'economic'), ' ',
      el('span', { class: 'legend-environmental' }, 'environmental'), ' ',
      el('span', { class: 'legend-overall' }, 'overall'));
  }
}
