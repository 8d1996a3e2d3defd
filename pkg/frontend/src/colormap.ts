/** Viridis-like colormap: piecewise-linear interpolation over anchor stops. */

const STOPS: Array<[number, number, number]> = [
  [68, 1, 84],
  [72, 40, 120],
  [62, 74, 137],
  [49, 104, 142],
  [38, 130, 142],
  [31, 158, 137],
  [53, 183, 121],
  [109, 205, 89],
  [180, 222, 44],
  [253, 231, 37],
];

/** Map t in [0, 1] to an rgb() string (clamped outside the range). */
export function viridis(t: number): string {
  const x = Math.min(1, Math.max(0, t)) * (STOPS.length - 1);
  const lo = Math.floor(x);
  const hi = Math.min(lo + 1, STOPS.length - 1);
  const f = x - lo;
  const ch = (k: 0 | 1 | 2) => Math.round(STOPS[lo][k] + f * (STOPS[hi][k] - STOPS[lo][k]));
  return `rgb(${ch(0)},${ch(1)},${ch(2)})`;
}

export const SERIES_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
export const SERIES_DASHES = ["none", "8 4", "2 3 8 3", "2 3"];
