/** Tiny SVG assembly helpers; geometry is handled by the plot modules. */

export interface Margin {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const DEFAULT_MARGIN: Margin = { top: 28, right: 80, bottom: 48, left: 72 };

export function escapeText(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(
  name: string,
  attrs: Record<string, string | number>,
  body = "",
): string {
  const parts = Object.entries(attrs)
    .map(([key, value]) => `${key}="${value}"`)
    .join(" ");
  return body === ""
    ? `<${name} ${parts}/>`
    : `<${name} ${parts}>${body}</${name}>`;
}

export function text(
  x: number,
  y: number,
  s: string,
  anchor = "middle",
  size = 12,
  extra: Record<string, string | number> = {},
): string {
  return tag(
    "text",
    { x: fmt(x), y: fmt(y), "text-anchor": anchor, "font-size": size, ...extra },
    escapeText(s),
  );
}

export function fmt(v: number): string {
  return Number.isInteger(v) ? String(v) : v.toFixed(2);
}

/** Short tick label: engineering-style, good for Hz-scale axes. */
export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const mag = Math.abs(v);
  if (mag >= 1e5 || mag < 1e-3) return v.toExponential(1).replace("e+", "e");
  return String(Number(v.toPrecision(4)));
}

export function document(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif">\n` +
    `<rect x="0" y="0" width="${width}" height="${height}" fill="white"/>\n` +
    body +
    "\n</svg>\n"
  );
}

export interface LinearScale {
  (v: number): number;
  domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as LinearScale;
  scale.domain = domain;
  return scale;
}

/** Frame with min/mid/max ticks on both axes and axis titles. */
export function axes(
  x: LinearScale,
  y: LinearScale,
  plot: { left: number; top: number; width: number; height: number },
  xLabel: string,
  yLabel: string,
): string {
  const { left, top, width, height } = plot;
  const bottom = top + height;
  const parts: string[] = [
    tag("rect", {
      x: left, y: top, width, height,
      fill: "none", stroke: "#444", "stroke-width": 1,
    }),
  ];
  const xTicks = [x.domain[0], (x.domain[0] + x.domain[1]) / 2, x.domain[1]];
  for (const v of xTicks) {
    const px = x(v);
    parts.push(tag("line", {
      x1: fmt(px), y1: bottom, x2: fmt(px), y2: bottom + 5,
      stroke: "#444", "stroke-width": 1,
    }));
    parts.push(text(px, bottom + 18, tickLabel(v), "middle", 11));
  }
  const yTicks = [y.domain[0], (y.domain[0] + y.domain[1]) / 2, y.domain[1]];
  for (const v of yTicks) {
    const py = y(v);
    parts.push(tag("line", {
      x1: left - 5, y1: fmt(py), x2: left, y2: fmt(py),
      stroke: "#444", "stroke-width": 1,
    }));
    parts.push(text(left - 8, py + 4, tickLabel(v), "end", 11));
  }
  parts.push(text(left + width / 2, bottom + 36, xLabel, "middle", 12));
  parts.push(text(16, top + height / 2, yLabel, "middle", 12, {
    transform: `rotate(-90 16 ${fmt(top + height / 2)})`,
  }));
  return parts.join("\n");
}
