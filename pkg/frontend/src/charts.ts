/**
 * Hand-rolled SVG charts. Heights and positions are presentation only;
 * every number and label shown comes straight from an API response.
 */

import { DIMENSION_ORDER, type DimensionId, type EvolutionPointDoc, type LevelDoc, type ScoreDoc } from './types';

const SVG_NS = 'http://www.w3.org/2000/svg';

/** One color per dimension, reused across both charts for continuity. */
export const DIMENSION_COLORS: Record<DimensionId, string> = {
  human: '#2f6fb2',
  economic: '#b2762f',
  environmental: '#3d8b4f',
};
const OVERALL_COLOR = '#444444';

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
  text?: string,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

/** Grouped bar chart: one bar per dimension plus the overall level. */
export function levelsBarChart(scores: ScoreDoc[], overall: LevelDoc, maxLevel: number): SVGSVGElement {
  const bars = [
    ...scores.map((s) => ({
      key: s.dimension as string,
      ordinal: s.level.ordinal,
      label: s.level.label,
      color: DIMENSION_COLORS[s.dimension],
    })),
    { key: 'overall', ordinal: overall.ordinal, label: overall.label, color: OVERALL_COLOR },
  ];
  const barWidth = 72;
  const gap = 28;
  const plotHeight = 160;
  const width = bars.length * (barWidth + gap) + gap;
  const height = plotHeight + 58;
  const svg = svgEl('svg', {
    viewBox: `0 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
    role: 'img',
    'aria-label': 'Sustainability levels by dimension',
  });

  bars.forEach((bar, i) => {
    const x = gap + i * (barWidth + gap);
    const barHeight = (bar.ordinal / maxLevel) * plotHeight;
    const y = 10 + plotHeight - barHeight;
    svg.append(
      svgEl('rect', {
        x: String(x), y: String(y),
        width: String(barWidth), height: String(barHeight),
        fill: bar.color, 'data-bar': bar.key,
      }),
      svgEl('text', {
        x: String(x + barWidth / 2), y: String(y - 4),
        'text-anchor': 'middle', class: 'bar-value', 'data-bar-value': bar.key,
      }, `L${bar.ordinal} ${bar.label}`),
      svgEl('text', {
        x: String(x + barWidth / 2), y: String(plotHeight + 28),
        'text-anchor': 'middle', class: 'bar-label',
      }, bar.key),
    );
  });
  return svg;
}

/** Level-over-time lines: one per dimension plus overall, L-ticked y axis. */
export function evolutionLineChart(points: EvolutionPointDoc[], maxLevel: number): SVGSVGElement {
  const plotWidth = Math.max(320, points.length * 90);
  const plotHeight = 180;
  const left = 44;
  const top = 12;
  const bottom = 44;
  const width = left + plotWidth + 16;
  const height = top + plotHeight + bottom;
  const svg = svgEl('svg', {
    viewBox: `0 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
    role: 'img',
    'aria-label': 'Sustainability level evolution over time',
  });

  const xAt = (index: number): number =>
    points.length === 1 ? left + plotWidth / 2 : left + (index / (points.length - 1)) * plotWidth;
  const yAt = (ordinal: number): number =>
    top + plotHeight - ((ordinal - 1) / Math.max(1, maxLevel - 1)) * plotHeight;

  for (let ordinal = 1; ordinal <= maxLevel; ordinal++) {
    const y = yAt(ordinal);
    svg.append(
      svgEl('line', {
        x1: String(left), y1: String(y), x2: String(left + plotWidth), y2: String(y),
        class: 'gridline',
      }),
      svgEl('text', { x: String(left - 8), y: String(y + 4), 'text-anchor': 'end', class: 'tick' },
        `L${ordinal}`),
    );
  }

  const series: { key: string; color: string; value: (p: EvolutionPointDoc) => number }[] = [
    ...DIMENSION_ORDER.map((dim) => ({
      key: dim as string,
      color: DIMENSION_COLORS[dim],
      value: (p: EvolutionPointDoc) => p.levels[dim],
    })),
    { key: 'overall', color: OVERALL_COLOR, value: (p) => p.overall },
  ];

  for (const { key, color, value } of series) {
    const coords = points.map((p, i) => `${xAt(i)},${yAt(value(p))}`).join(' ');
    svg.append(svgEl('polyline', {
      points: coords, fill: 'none', stroke: color, 'stroke-width': '2', 'data-series': key,
    }));
    points.forEach((point, i) => {
      svg.append(svgEl('circle', {
        cx: String(xAt(i)), cy: String(yAt(value(point))), r: '3.5',
        fill: color, 'data-series': key, 'data-point': String(i),
      }));
    });
  }

  points.forEach((point, i) => {
    svg.append(svgEl('text', {
      x: String(xAt(i)), y: String(top + plotHeight + 18),
      'text-anchor': 'middle', class: 'tick',
    }, point.timestamp.slice(0, 10)));
    if (point.catalog_digest_changed) {
      // ring + note: this point was scored under a different catalog version
      const marker = svgEl('circle', {
        cx: String(xAt(i)), cy: String(yAt(point.overall)), r: '7',
        fill: 'none', stroke: '#c0392b', 'stroke-width': '2',
        class: 'digest-change', 'data-digest-change': String(i),
      });
      marker.append(svgEl('title', {}, 'Catalog changed before this assessment'));
      svg.append(
        marker,
        svgEl('text', {
          x: String(xAt(i)), y: String(top + plotHeight + 34),
          'text-anchor': 'middle', class: 'tick digest-change-note',
        }, 'catalog changed'),
      );
    }
  });

  return svg;
}
