export { parseCsv, numericColumn, columnIndex, UsageError } from "./csv.js";
export type { Table } from "./csv.js";
export { renderHeatmap } from "./heatmap.js";
export type { HeatmapOptions, HeatmapResult } from "./heatmap.js";
export { renderLines } from "./lines.js";
export type { LinesOptions, LinesResult } from "./lines.js";
export { viridis } from "./colormap.js";
