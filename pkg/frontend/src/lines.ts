/** Styled line plots: one series per distinct value of a grouping column. */

import { Table, UsageError, columnIndex, numericColumn } from "./csv.js";
import { SERIES_COLORS, SERIES_DASHES } from "./colormap.js";
import { DEFAULT_MARGIN, axes, document, fmt, linearScale, tag, text } from "./svg.js";

export interface LinesOptions {
  /** y level of a dashed reference line; null suppresses it. Defaults to
   *  0.5 (the vacuum variance) when the y column looks like a variance. */
  referenceLevel?: number | null;
  width?: number;
  height?: number;
  title?: string;
}

export interface LinesResult {
  svg: string;
  seriesCount: number;
  /** rows skipped because x or y was not finite (flagged sweep points) */
  skipped: number;
}

export function renderLines(
  table: Table,
  xCol: string,
  seriesCol: string,
  yCol: string,
  options: LinesOptions = {},
): LinesResult {
  const xs = numericColumn(table, xCol);
  const ys = numericColumn(table, yCol);
  const sIdx = columnIndex(table, seriesCol);
  const width = options.width ?? 560;
  const height = options.height ?? 420;
  const margin = { ...DEFAULT_MARGIN, right: 140 };
  const plot = {
    left: margin.left,
    top: margin.top,
    width: width - margin.left - margin.right,
    height: height - margin.top - margin.bottom,
  };

  const groups = new Map<string, Array<[number, number]>>();
  let skipped = 0;
  for (let i = 0; i < xs.length; i++) {
    if (!Number.isFinite(xs[i]) || !Number.isFinite(ys[i])) {
      skipped += 1;
      continue;
    }
    const key = table.rows[i][sIdx];
    if (!groups.has(key)) groups.set(key, []);
    groups.get(key)!.push([xs[i], ys[i]]);
  }
  if (groups.size === 0) {
    throw new UsageError("no finite data points to plot");
  }
  for (const points of groups.values()) {
    points.sort((a, b) => a[0] - b[0]);
  }

  const finiteX = xs.filter(Number.isFinite);
  const finiteY = ys.filter(Number.isFinite);
  const reference = options.referenceLevel !== undefined
    ? options.referenceLevel
    : (yCol.includes("var") && !yCol.endsWith("_dB") ? 0.5 : null);
  const yLo = Math.min(...finiteY, reference ?? Infinity);
  const yHi = Math.max(...finiteY, reference ?? -Infinity);
  const pad = (yHi - yLo || 1) * 0.05;
  const x = linearScale([Math.min(...finiteX), Math.max(...finiteX)],
                        [plot.left, plot.left + plot.width]);
  const y = linearScale([yLo - pad, yHi + pad],
                        [plot.top + plot.height, plot.top]);

  const pieces: string[] = [];
  if (reference !== null && reference !== undefined) {
    pieces.push(tag("line", {
      class: "reference",
      x1: plot.left, y1: fmt(y(reference)),
      x2: plot.left + plot.width, y2: fmt(y(reference)),
      stroke: "#888", "stroke-width": 1, "stroke-dasharray": "3 3",
    }));
    pieces.push(text(plot.left + plot.width - 4, y(reference) - 4,
      `vacuum ${reference}`, "end", 10, { fill: "#888" }));
  }
  let k = 0;
  for (const [key, points] of groups) {
    const path = points
      .map(([px, py]) => `${fmt(x(px))},${fmt(y(py))}`)
      .join(" ");
    const attrs: Record<string, string | number> = {
      class: "series",
      points: path,
      fill: "none",
      stroke: SERIES_COLORS[k % SERIES_COLORS.length],
      "stroke-width": 1.8,
    };
    const dash = SERIES_DASHES[k % SERIES_DASHES.length];
    if (dash !== "none") attrs["stroke-dasharray"] = dash;
    pieces.push(tag("polyline", attrs));
    const ly = plot.top + 14 + 18 * k;
    const lx = plot.left + plot.width + 12;
    pieces.push(tag("line", {
      x1: lx, y1: ly - 4, x2: lx + 24, y2: ly - 4,
      stroke: SERIES_COLORS[k % SERIES_COLORS.length], "stroke-width": 1.8,
      ...(dash !== "none" ? { "stroke-dasharray": dash } : {}),
    }));
    pieces.push(text(lx + 30, ly, `${seriesCol} = ${key}`, "start", 10));
    k += 1;
  }
  pieces.push(axes(x, y, plot, xCol, yCol));
  if (options.title) {
    pieces.push(text(plot.left + plot.width / 2, 16, options.title, "middle", 13));
  }
  return {
    svg: document(width, height, pieces.join("\n")),
    seriesCount: groups.size,
    skipped,
  };
}
