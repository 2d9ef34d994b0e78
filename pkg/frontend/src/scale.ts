/** Linear scales and tick generation for the SVG charts. */

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const slope = d1 === d0 ? 0 : (r1 - r0) / (d1 - d0);
  const scale = ((value: number) => r0 + (value - d0) * slope) as LinearScale;
  scale.domain = [d0, d1];
  scale.range = [r0, r1];
  return scale;
}

export function extent(values: number[]): [number, number] {
  if (values.length === 0) {
    throw new Error("extent of an empty list");
  }
  let lo = values[0];
  let hi = values[0];
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

/** Round tick positions covering [lo, hi] with a 1/2/5 step ladder. */
export function ticks(lo: number, hi: number, count = 6): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const rawStep = (hi - lo) / Math.max(1, count);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = power;
  for (const mult of [1, 2, 5, 10]) {
    step = mult * power;
    if (step >= rawStep) break;
  }
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    // snap away float drift so labels print clean
    out.push(Number(v.toFixed(12)));
  }
  return out;
}

export function formatTick(value: number): string {
  return Object.is(value, -0) ? "0" : String(value);
}
