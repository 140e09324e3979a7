/**
 * Questionnaire view: every catalog action as a checkbox, grouped by
 * dimension in fixed order. Submitting posts exactly the checked set.
 */

import { ApiError, nowTimestamp } from '../api';
import { clear, el, errorBanner } from '../dom';
import type { AppContext } from '../app';
import { DIMENSION_ORDER, type CatalogDocument } from '../types';

export interface QuestionnaireState {
  catalog: CatalogDocument | null;
  checked: Set<string>;
  companyId: string;
  submitting: boolean;
}

export function renderQuestionnaire(root: HTMLElement, ctx: AppContext, signal: AbortSignal): void {
  const state: QuestionnaireState = {
    catalog: null,
    checked: new Set(),
    companyId: '',
    submitting: false,
  };

  clear(root);
  root.append(el('p', { class: 'loading' }, 'Loading catalog…'));

  const load = async (): Promise<void> => {
    try {
      const response = await ctx.api.getCatalog(signal);
      state.catalog = response.catalog;
      renderForm(response.catalog);
    } catch (error) {
      if (signal.aborted) return;
      clear(root);
      root.append(errorBanner(`Could not load the action catalog: ${describe(error)}`, () => {
        clear(root);
        root.append(el('p', { class: 'loading' }, 'Loading catalog…'));
        void load();
      }));
    }
  };
  void load();

  function renderForm(catalog: CatalogDocument): void {
    clear(root);

    const feedback = el('div', { class: 'feedback' });
    const companyInput = el('input', {
      type: 'text',
      id: 'company-id',
      name: 'company-id',
      placeholder: 'e.g. acme-soft',
      value: state.companyId,
    });
    const submitButton = el('button', { type: 'submit', class: 'primary' }, 'Evaluate');

    const syncControls = (): void => {
      submitButton.disabled = state.companyId.trim() === '' || state.submitting;
      submitButton.textContent = state.submitting ? 'Evaluating…' : 'Evaluate';
    };
    companyInput.addEventListener('input', () => {
      state.companyId = companyInput.value;
      syncControls();
    });

    const byId = new Map(catalog.dimensions.map((d) => [d.id, d]));
    const sections = DIMENSION_ORDER.flatMap((dimId) => {
      const dimension = byId.get(dimId);
      if (!dimension) return [];
      const boxes = dimension.actions.map((action) => {
        const checkbox = el('input', {
          type: 'checkbox',
          value: action.id,
          'data-action-id': action.id,
        });
        checkbox.checked = state.checked.has(action.id);
        checkbox.addEventListener('change', () => {
          if (checkbox.checked) state.checked.add(action.id);
          else state.checked.delete(action.id);
        });
        return el('label', { class: 'action-row' }, checkbox, el('span', {}, action.statement));
      });
      return [
        el('section', { class: 'dimension-section', 'data-dimension': dimId },
          el('h2', {}, dimension.name),
          ...boxes),
      ];
    });

    const form = el('form', { class: 'questionnaire' },
      el('p', { class: 'hint' },
        'Tick every action your CSR already implements, then evaluate to see your sustainability levels.'),
      el('div', { class: 'field' },
        el('label', { for: 'company-id' }, 'Company id'),
        companyInput),
      ...sections,
      feedback,
      submitButton,
    );
    form.addEventListener('submit', (event) => {
      event.preventDefault();
      void submit();
    });
    syncControls();
    root.append(el('h1', {}, `Sustainability questionnaire (catalog ${catalog.catalog_version})`), form);

    async function submit(): Promise<void> {
      if (state.submitting || state.companyId.trim() === '') return;
      state.submitting = true;
      syncControls();
      clear(feedback);
      try {
        const response = await ctx.api.submitAssessment({
          company_id: state.companyId.trim(),
          timestamp: nowTimestamp(),
          implemented: [...state.checked].sort(),
        }, signal);
        ctx.state.lastAssessment = { response, catalog };
        ctx.navigate('results');
      } catch (error) {
        if (signal.aborted) return;
        if (error instanceof ApiError) {
          const where = error.path ? ` (${error.path})` : '';
          feedback.append(el('p', { class: 'inline-error', role: 'alert' },
            `The server rejected the submission${where}: ${error.detail}`));
        } else {
          feedback.append(errorBanner(`Could not reach the server: ${describe(error)}`, () => {
            void submit();
          }));
        }
      } finally {
        state.submitting = false;
        syncControls();
      }
    }
  }
}

function describe(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
