/** Dark-to-bright color ramp for entropy values on the fixed [0, 2] bit scale. */

export const ENTROPY_DOMAIN: [number, number] = [0, 2];

// viridis-like anchors, dark indigo up to yellow
const ANCHORS: [number, number, number][] = [
  [68, 1, 84],
  [59, 82, 139],
  [33, 145, 140],
  [94, 201, 98],
  [253, 231, 37],
];

export function entropyColor(value: number): string {
  const [lo, hi] = ENTROPY_DOMAIN;
  const clamped = Math.min(hi, Math.max(lo, value));
  const t = (clamped - lo) / (hi - lo);
  const pos = t * (ANCHORS.length - 1);
  const idx = Math.min(ANCHORS.length - 2, Math.floor(pos));
  const frac = pos - idx;
  const a = ANCHORS[idx];
  const b = ANCHORS[idx + 1];
  const mix = (i: number) => Math.round(a[i] + (b[i] - a[i]) * frac);
  return `rgb(${mix(0)},${mix(1)},${mix(2)})`;
}
