/**
 * Minimal deterministic SVG line charts. No timestamps, no randomness:
 * the same ChartData always serializes to the same bytes.
 */

import type { ChartData } from "./bench.js";

const WIDTH = 720;
const HEIGHT = 420;
const MARGIN = { top: 40, right: 160, bottom: 48, left: 68 };

// matplotlib "tab10" order, keyed by sorted series position
const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

export function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function niceStep(rough: number): number {
  const pow = Math.pow(10, Math.floor(Math.log10(rough)));
  const frac = rough / pow;
  const nice = frac >= Math.sqrt(50) ? 10 : frac >= Math.sqrt(10) ? 5 : frac >= Math.SQRT2 ? 2 : 1;
  return nice * pow;
}

/** Round tick positions covering [min, max], roughly `count` of them. */
export function ticks(min: number, max: number, count: number): number[] {
  if (!(max > min)) {
    return [min];
  }
  const step = niceStep((max - min) / count);
  const start = Math.ceil(min / step) * step;
  const out: number[] = [];
  for (let v = start; v <= max + step / 2; v += step) {
    out.push(Number(v.toPrecision(12)));
  }
  return out;
}

function fmt(v: number): string {
  // toPrecision then back through Number drops float noise like 0.30000000000000004
  const clean = Number(v.toPrecision(6));
  if (clean !== 0 && Math.abs(clean) >= 1e6 && Number.isInteger(clean / 1e5)) {
    return `${Number((clean / 1e6).toPrecision(6))}M`;
  }
  if (clean !== 0 && Math.abs(clean) >= 1e3 && Number.isInteger(clean / 1e3)) {
    return `${clean / 1e3}k`;
  }
  return String(clean);
}

function px(v: number): string {
  return v.toFixed(2);
}

/** Render one chart (title, axes, one polyline per series, legend) to SVG text. */
export function renderSvg(chart: ChartData, xLabel: string, yLabel = "time (s)"): string {
  const xs = chart.series.flatMap((s) => s.points.map((p) => p.x));
  const ys = chart.series.flatMap((s) => s.points.map((p) => p.y));
  if (xs.length === 0) {
    throw new Error(`chart ${chart.slug} has no points`);
  }

  let xMin = Math.min(...xs);
  let xMax = Math.max(...xs);
  if (xMin === xMax) {
    // single x value: pad so the point sits mid-chart
    xMin -= 1;
    xMax += 1;
  }
  const yMax = Math.max(...ys) > 0 ? Math.max(...ys) : 1;

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const sx = (x: number) => MARGIN.left + ((x - xMin) / (xMax - xMin)) * plotW;
  const sy = (y: number) => MARGIN.top + plotH - (y / yMax) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${px(MARGIN.left + plotW / 2)}" y="22" text-anchor="middle" font-size="15">${escapeXml(chart.title)}</text>`,
  );

  // gridlines + y ticks
  for (const t of ticks(0, yMax, 5)) {
    const y = px(sy(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" y2="${y}" stroke="#dddddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${px(sy(t) + 4)}" text-anchor="end" font-size="11">${fmt(t)}</text>`,
    );
  }
  // x ticks
  for (const t of ticks(xMin, xMax, 6)) {
    const x = px(sx(t));
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top + plotH}" x2="${x}" y2="${MARGIN.top + plotH + 5}" stroke="#333333" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${x}" y="${MARGIN.top + plotH + 20}" text-anchor="middle" font-size="11">${fmt(t)}</text>`,
    );
  }

  // axes
  parts.push(
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${MARGIN.top + plotH}" stroke="#333333" stroke-width="1"/>`,
  );
  parts.push(
    `<line x1="${MARGIN.left}" y1="${MARGIN.top + plotH}" x2="${MARGIN.left + plotW}" y2="${MARGIN.top + plotH}" stroke="#333333" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${px(MARGIN.left + plotW / 2)}" y="${HEIGHT - 10}" text-anchor="middle" font-size="12">${escapeXml(xLabel)}</text>`,
  );
  parts.push(
    `<text x="16" y="${px(MARGIN.top + plotH / 2)}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${px(MARGIN.top + plotH / 2)})">${escapeXml(yLabel)}</text>`,
  );

  // series
  chart.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length]!;
    const pts = s.points.map((p) => `${px(sx(p.x))},${px(sy(p.y))}`).join(" ");
    parts.push(
      `<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.8" data-algo="${escapeXml(s.algo)}"/>`,
    );
    for (const p of s.points) {
      parts.push(`<circle cx="${px(sx(p.x))}" cy="${px(sy(p.y))}" r="2.6" fill="${color}"/>`);
    }
    const ly = MARGIN.top + 10 + i * 20;
    parts.push(
      `<line x1="${MARGIN.left + plotW + 14}" y1="${ly}" x2="${MARGIN.left + plotW + 38}" y2="${ly}" stroke="${color}" stroke-width="1.8"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left + plotW + 44}" y="${ly + 4}" font-size="12" class="legend">${escapeXml(s.algo)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
