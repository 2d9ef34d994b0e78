/** Small SVG fragment builders shared by the chart renderers. */

import { formatTick, LinearScale } from "./scale.js";

export const FONT = "12px sans-serif";
export const AXIS_COLOR = "#333333";

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n` +
    body +
    "</svg>\n"
  );
}

export function axisBottom(
  scale: LinearScale,
  y: number,
  tickValues: number[],
  label: string,
): string {
  const [x0, x1] = scale.range;
  const parts = [
    `<g class="axis x" stroke="${AXIS_COLOR}" fill="none">`,
    `<line x1="${x0}" y1="${y}" x2="${x1}" y2="${y}"/>`,
  ];
  for (const v of tickValues) {
    const x = scale(v);
    parts.push(`<line x1="${x}" y1="${y}" x2="${x}" y2="${y + 5}"/>`);
    parts.push(
      `<text x="${x}" y="${y + 18}" fill="${AXIS_COLOR}" stroke="none" ` +
        `text-anchor="middle">${escapeXml(formatTick(v))}</text>`,
    );
  }
  const mid = (x0 + x1) / 2;
  parts.push(
    `<text x="${mid}" y="${y + 38}" fill="${AXIS_COLOR}" stroke="none" ` +
      `text-anchor="middle">${escapeXml(label)}</text>`,
  );
  parts.push("</g>");
  return parts.join("\n") + "\n";
}

export function axisLeft(
  scale: LinearScale,
  x: number,
  tickValues: number[],
  label: string,
): string {
  const [y0, y1] = scale.range;
  const parts = [
    `<g class="axis y" stroke="${AXIS_COLOR}" fill="none">`,
    `<line x1="${x}" y1="${y0}" x2="${x}" y2="${y1}"/>`,
  ];
  for (const v of tickValues) {
    const y = scale(v);
    parts.push(`<line x1="${x - 5}" y1="${y}" x2="${x}" y2="${y}"/>`);
    parts.push(
      `<text x="${x - 8}" y="${y + 4}" fill="${AXIS_COLOR}" stroke="none" ` +
        `text-anchor="end">${escapeXml(formatTick(v))}</text>`,
    );
  }
  const midY = (y0 + y1) / 2;
  parts.push(
    `<text x="${x - 40}" y="${midY}" fill="${AXIS_COLOR}" stroke="none" ` +
      `text-anchor="middle" transform="rotate(-90 ${x - 40} ${midY})">` +
      `${escapeXml(label)}</text>`,
  );
  parts.push("</g>");
  return parts.join("\n") + "\n";
}

export function title(width: number, text: string): string {
  if (!text) {
    return "";
  }
  return (
    `<text x="${width / 2}" y="18" text-anchor="middle" font-size="14" ` +
    `fill="${AXIS_COLOR}">${escapeXml(text)}</text>\n`
  );
}
