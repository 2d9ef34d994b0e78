export { CSV_HEADER, CsvFormatError, parseSweepCsv } from "./csv.js";
export type { Geometry, SweepRow } from "./csv.js";
export { ENTROPY_DOMAIN, entropyColor } from "./colormap.js";
export { renderLinePlot } from "./linePlot.js";
export type { LinePlotOptions } from "./linePlot.js";
export { renderHeatmap } from "./heatmap.js";
export type { HeatmapOptions } from "./heatmap.js";
export { runCli } from "./cli.js";
export { extent, linearScale, ticks } from "./scale.js";
