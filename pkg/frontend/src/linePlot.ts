/**
 * Entropy-vs-u0 line plot: one curve per geometry, ring drawn solid and
 * chain drawn dotted, entropy axis pinned to [0, 2] bits.
 */

import { Geometry, SweepRow } from "./csv.js";
import { ENTROPY_DOMAIN } from "./colormap.js";
import { extent, linearScale, ticks } from "./scale.js";
import { axisBottom, axisLeft, svgDocument, title } from "./svg.js";

export interface LinePlotOptions {
  width?: number;
  height?: number;
  title?: string;
  xLabel?: string;
  yLabel?: string;
}

const MARGIN = { top: 30, right: 30, bottom: 50, left: 64 };

const SERIES_STYLE: Record<Geometry, { color: string; dash: string | null }> = {
  ring: { color: "#1b4b9b", dash: null },
  chain: { color: "#b3321b", dash: "6 5" },
};

export function renderLinePlot(rows: SweepRow[], options: LinePlotOptions = {}): string {
  if (rows.length === 0) {
    throw new Error("no data rows to plot");
  }
  const width = options.width ?? 800;
  const height = options.height ?? 500;
  const xLabel = options.xLabel ?? "U0/t";
  const yLabel = options.yLabel ?? "E (bits)";

  const x = linearScale(extent(rows.map((r) => r.u0OverT)), [
    MARGIN.left,
    width - MARGIN.right,
  ]);
  const y = linearScale(ENTROPY_DOMAIN, [height - MARGIN.bottom, MARGIN.top]);

  const byGeometry = new Map<Geometry, SweepRow[]>();
  for (const row of rows) {
    const series = byGeometry.get(row.geometry);
    if (series === undefined) {
      byGeometry.set(row.geometry, [row]);
    } else {
      series.push(row);
    }
  }

  let body = title(width, options.title ?? "");
  body += axisBottom(x, height - MARGIN.bottom, ticks(x.domain[0], x.domain[1]), xLabel);
  body += axisLeft(y, MARGIN.left, ticks(0, 2, 4), yLabel);

  for (const [geometry, series] of byGeometry) {
    const style = SERIES_STYLE[geometry];
    const points = [...series].sort((a, b) => a.u0OverT - b.u0OverT);
    const d = points
      .map(
        (p, i) =>
          `${i === 0 ? "M" : "L"}${x(p.u0OverT).toFixed(2)} ${y(p.entropyBits).toFixed(3)}`,
      )
      .join(" ");
    const dash = style.dash === null ? "" : ` stroke-dasharray="${style.dash}"`;
    body +=
      `<path class="series ${geometry}" d="${d}" fill="none" ` +
      `stroke="${style.color}" stroke-width="1.8"${dash}/>\n`;
  }

  // legend, one swatch line per geometry present
  let legendY = MARGIN.top + 6;
  const legendX = width - MARGIN.right - 120;
  for (const geometry of byGeometry.keys()) {
    const style = SERIES_STYLE[geometry];
    const dash = style.dash === null ? "" : ` stroke-dasharray="${style.dash}"`;
    body +=
      `<line class="legend ${geometry}" x1="${legendX}" y1="${legendY}" ` +
      `x2="${legendX + 34}" y2="${legendY}" stroke="${style.color}" ` +
      `stroke-width="1.8"${dash}/>\n` +
      `<text x="${legendX + 40}" y="${legendY + 4}" fill="#333333">${geometry}</text>\n`;
    legendY += 18;
  }

  return svgDocument(width, height, body);
}
