/**
 * Entropy heatmap over the (u_over_t, u0_over_t) grid of a surface sweep,
 * one colored cell per grid point plus a [0, 2] bit colorbar.
 */

import { SweepRow } from "./csv.js";
import { ENTROPY_DOMAIN, entropyColor } from "./colormap.js";
import { linearScale, ticks } from "./scale.js";
import { axisBottom, axisLeft, svgDocument, title } from "./svg.js";

export interface HeatmapOptions {
  width?: number;
  height?: number;
  title?: string;
  xLabel?: string;
  yLabel?: string;
}

const MARGIN = { top: 30, right: 110, bottom: 50, left: 64 };

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

export function renderHeatmap(rows: SweepRow[], options: HeatmapOptions = {}): string {
  if (rows.length === 0) {
    throw new Error("no data rows to plot");
  }
  const geometries = new Set(rows.map((r) => r.geometry));
  if (geometries.size > 1) {
    throw new Error(
      `heatmap needs a single geometry, got ${[...geometries].sort().join(", ")}`,
    );
  }
  const width = options.width ?? 860;
  const height = options.height ?? 640;
  const xLabel = options.xLabel ?? "U/t";
  const yLabel = options.yLabel ?? "U0/t";

  const us = uniqueSorted(rows.map((r) => r.uOverT));
  const u0s = uniqueSorted(rows.map((r) => r.u0OverT));
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const cellW = plotW / us.length;
  const cellH = plotH / u0s.length;
  const xIndex = new Map(us.map((v, i) => [v, i]));
  const yIndex = new Map(u0s.map((v, i) => [v, i]));

  let body = title(width, options.title ?? "");
  let cells = "";
  for (const row of rows) {
    const i = xIndex.get(row.uOverT)!;
    const j = yIndex.get(row.u0OverT)!;
    const cx = MARGIN.left + i * cellW;
    // largest u0 at the top
    const cy = MARGIN.top + (u0s.length - 1 - j) * cellH;
    cells +=
      `<rect class="cell" x="${cx.toFixed(2)}" y="${cy.toFixed(2)}" ` +
      `width="${(cellW + 0.5).toFixed(2)}" height="${(cellH + 0.5).toFixed(2)}" ` +
      `fill="${entropyColor(row.entropyBits)}"/>\n`;
  }
  body += cells;

  // tick scales span the cell centers of the edge rows and columns
  const x = linearScale(
    [us[0], us[us.length - 1]],
    [MARGIN.left + cellW / 2, MARGIN.left + plotW - cellW / 2],
  );
  const y = linearScale(
    [u0s[0], u0s[u0s.length - 1]],
    [MARGIN.top + plotH - cellH / 2, MARGIN.top + cellH / 2],
  );
  body += axisBottom(x, height - MARGIN.bottom, ticks(us[0], us[us.length - 1]), xLabel);
  body += axisLeft(y, MARGIN.left, ticks(u0s[0], u0s[u0s.length - 1]), yLabel);

  // colorbar on the right, bottom = 0 bits
  const barX = width - MARGIN.right + 30;
  const barW = 16;
  const steps = 64;
  const stepH = plotH / steps;
  for (let s = 0; s < steps; s++) {
    const value = ENTROPY_DOMAIN[1] * (s + 0.5) / steps;
    const by = MARGIN.top + plotH - (s + 1) * stepH;
    body +=
      `<rect class="colorbar" x="${barX}" y="${by.toFixed(2)}" width="${barW}" ` +
      `height="${(stepH + 0.5).toFixed(2)}" fill="${entropyColor(value)}"/>\n`;
  }
  const bar = linearScale(ENTROPY_DOMAIN, [MARGIN.top + plotH, MARGIN.top]);
  for (const v of [0, 0.5, 1, 1.5, 2]) {
    body +=
      `<text x="${barX + barW + 6}" y="${(bar(v) + 4).toFixed(2)}" ` +
      `fill="#333333">${v}</text>\n`;
  }
  body +=
    `<text x="${barX + barW / 2}" y="${MARGIN.top - 8}" text-anchor="middle" ` +
    `fill="#333333">E (bits)</text>\n`;

  return svgDocument(width, height, body);
}
