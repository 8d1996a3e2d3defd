/** Figure renderer for sweep CSV files.
 *
 *   magnomech-figplots heatmap --csv fig2a.csv --x detuning_m_over_2pi_hz \
 *       --y detuning_a_over_2pi_hz --z var_x --mask-above 0.5 --out fig2a.svg
 *   magnomech-figplots lines --csv fig4c.csv --x r --series temperature_k \
 *       --y var_q_tilde --out fig4c.svg
 *
 * Exit codes: 0 success, 1 usage error.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { UsageError, parseCsv } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLines } from "./lines.js";

interface Args {
  flags: Map<string, string>;
  bools: Set<string>;
}

function parseArgs(argv: string[]): Args {
  const flags = new Map<string, string>();
  const bools = new Set<string>();
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (!arg.startsWith("--")) {
      throw new UsageError(`unexpected argument '${arg}'`);
    }
    const name = arg.slice(2);
    if (i + 1 < argv.length && !argv[i + 1].startsWith("--")) {
      flags.set(name, argv[++i]);
    } else {
      bools.add(name);
    }
  }
  return { flags, bools };
}

function need(args: Args, name: string): string {
  const v = args.flags.get(name);
  if (v === undefined) {
    throw new UsageError(`missing required flag --${name}`);
  }
  return v;
}

export function main(argv: string[]): number {
  try {
    const [command, ...rest] = argv;
    if (command !== "heatmap" && command !== "lines") {
      throw new UsageError("usage: magnomech-figplots <heatmap|lines> --csv ... --out ...");
    }
    const args = parseArgs(rest);
    const table = parseCsv(readFileSync(need(args, "csv"), "utf-8"));
    const out = need(args, "out");
    const title = args.flags.get("title");
    if (command === "heatmap") {
      const maskText = args.flags.get("mask-above");
      const result = renderHeatmap(table, need(args, "x"), need(args, "y"),
        need(args, "z"), {
          maskAbove: maskText === undefined ? undefined : Number(maskText),
          title,
        });
      writeFileSync(out, result.svg);
      if (!args.bools.has("quiet")) {
        console.log(`wrote ${out} (${result.drawn} cells, ${result.masked} masked)`);
      }
    } else {
      const noRef = args.bools.has("no-reference");
      const refText = args.flags.get("reference");
      const result = renderLines(table, need(args, "x"), need(args, "series"),
        need(args, "y"), {
          referenceLevel: noRef ? null
            : refText === undefined ? undefined : Number(refText),
          title,
        });
      writeFileSync(out, result.svg);
      if (!args.bools.has("quiet")) {
        console.log(`wrote ${out} (${result.seriesCount} series)`);
      }
    }
    return 0;
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

// invoked directly (not imported by tests)
if (process.argv[1] && /cli\.(js|ts)$/.test(process.argv[1])) {
  process.exit(main(process.argv.slice(2)));
}
