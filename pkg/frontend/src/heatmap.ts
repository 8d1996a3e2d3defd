/** Heatmaps over a rectangular sweep grid, with blank above-threshold masking. */

import { Table, UsageError, numericColumn } from "./csv.js";
import { viridis } from "./colormap.js";
import { DEFAULT_MARGIN, axes, document, fmt, linearScale, tag, text, tickLabel } from "./svg.js";

export interface HeatmapOptions {
  /** cells with z strictly above this value are left blank */
  maskAbove?: number;
  width?: number;
  height?: number;
  title?: string;
}

export interface HeatmapResult {
  svg: string;
  /** number of cells drawn with a colour */
  drawn: number;
  /** number of cells left blank by the threshold */
  masked: number;
  /** number of rows skipped because x, y or z was not a finite number */
  skipped: number;
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values.filter(Number.isFinite))].sort((a, b) => a - b);
}

/** Cell edges: midpoints between neighbouring grid values. */
function edges(centers: number[]): number[] {
  if (centers.length === 1) {
    const c = centers[0];
    const half = c === 0 ? 0.5 : Math.abs(c) * 0.05;
    return [c - half, c + half];
  }
  const out: number[] = [centers[0] - (centers[1] - centers[0]) / 2];
  for (let i = 0; i + 1 < centers.length; i++) {
    out.push((centers[i] + centers[i + 1]) / 2);
  }
  const n = centers.length;
  out.push(centers[n - 1] + (centers[n - 1] - centers[n - 2]) / 2);
  return out;
}

export function renderHeatmap(
  table: Table,
  xCol: string,
  yCol: string,
  zCol: string,
  options: HeatmapOptions = {},
): HeatmapResult {
  const xs = numericColumn(table, xCol);
  const ys = numericColumn(table, yCol);
  const zs = numericColumn(table, zCol);
  const width = options.width ?? 560;
  const height = options.height ?? 440;
  const margin = DEFAULT_MARGIN;
  const plot = {
    left: margin.left,
    top: margin.top,
    width: width - margin.left - margin.right,
    height: height - margin.top - margin.bottom,
  };

  const xCenters = uniqueSorted(xs);
  const yCenters = uniqueSorted(ys);
  if (xCenters.length === 0 || yCenters.length === 0) {
    throw new UsageError("heatmap needs at least one finite x and y value");
  }
  const xEdges = edges(xCenters);
  const yEdges = edges(yCenters);
  const x = linearScale([xEdges[0], xEdges[xEdges.length - 1]],
                        [plot.left, plot.left + plot.width]);
  const y = linearScale([yEdges[0], yEdges[yEdges.length - 1]],
                        [plot.top + plot.height, plot.top]);

  const mask = options.maskAbove;
  const kept = zs.filter((z, i) => Number.isFinite(z) && Number.isFinite(xs[i])
    && Number.isFinite(ys[i]) && !(mask !== undefined && z > mask));
  const zLo = kept.length ? Math.min(...kept) : 0;
  const zHi = kept.length ? Math.max(...kept) : 1;
  const zSpan = zHi - zLo || 1;

  const xIndex = new Map(xCenters.map((v, i) => [v, i]));
  const yIndex = new Map(yCenters.map((v, i) => [v, i]));
  const cells: string[] = [];
  let drawn = 0;
  let masked = 0;
  let skipped = 0;
  for (let i = 0; i < zs.length; i++) {
    if (!Number.isFinite(xs[i]) || !Number.isFinite(ys[i]) || !Number.isFinite(zs[i])) {
      skipped += 1;
      continue;
    }
    if (mask !== undefined && zs[i] > mask) {
      masked += 1;
      continue;
    }
    const xi = xIndex.get(xs[i])!;
    const yi = yIndex.get(ys[i])!;
    const x0 = x(xEdges[xi]);
    const x1 = x(xEdges[xi + 1]);
    const y0 = y(yEdges[yi + 1]);
    const y1 = y(yEdges[yi]);
    cells.push(tag("rect", {
      class: "cell",
      x: fmt(x0), y: fmt(y0),
      width: fmt(Math.max(x1 - x0, 0.1)), height: fmt(Math.max(y1 - y0, 0.1)),
      fill: viridis((zs[i] - zLo) / zSpan),
    }));
    drawn += 1;
  }

  // colourbar on the right margin
  const barX = plot.left + plot.width + 18;
  const barW = 14;
  const steps = 48;
  const bar: string[] = [];
  for (let i = 0; i < steps; i++) {
    const t = (i + 0.5) / steps;
    const yTop = plot.top + plot.height * (1 - (i + 1) / steps);
    bar.push(tag("rect", {
      x: barX, y: fmt(yTop),
      width: barW, height: fmt(plot.height / steps + 0.5),
      fill: viridis(t),
    }));
  }
  bar.push(text(barX + barW + 4, plot.top + plot.height + 4, tickLabel(zLo), "start", 10));
  bar.push(text(barX + barW + 4, plot.top + 10, tickLabel(zHi), "start", 10));
  bar.push(text(barX + barW / 2, plot.top - 8, zCol, "middle", 11));

  const pieces = [
    cells.join("\n"),
    axes(x, y, plot, xCol, yCol),
    bar.join("\n"),
  ];
  if (options.title) {
    pieces.push(text(plot.left + plot.width / 2, 16, options.title, "middle", 13));
  }
  if (mask !== undefined) {
    pieces.push(text(plot.left, height - 6,
      `blank: ${zCol} > ${mask} (${masked} cells)`, "start", 10,
      { fill: "#666" }));
  }
  return { svg: document(width, height, pieces.join("\n")), drawn, masked, skipped };
}
