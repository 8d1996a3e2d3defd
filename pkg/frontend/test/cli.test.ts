import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";
import { main } from "../src/cli.js";

const TESTDATA = join(__dirname, "..", "testdata");

function tmp(name: string): string {
  return join(mkdtempSync(join(tmpdir(), "figplots-")), name);
}

describe("cli", () => {
  it("renders a heatmap from the detuning sweep", () => {
    const out = tmp("fig2a.svg");
    const code = main([
      "heatmap", "--csv", join(TESTDATA, "fig2a.csv"),
      "--x", "detuning_m_over_2pi_hz", "--y", "detuning_a_over_2pi_hz",
      "--z", "var_x", "--mask-above", "0.5", "--out", out, "--quiet",
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf-8")).toContain("<svg");
  });

  it("renders the temperature-family lines", () => {
    const out = tmp("fig4c.svg");
    const code = main([
      "lines", "--csv", join(TESTDATA, "fig4c.csv"),
      "--x", "r", "--series", "temperature_k", "--y", "var_q_tilde",
      "--out", out, "--quiet",
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf-8")).toContain('class="series"');
  });

  it("fails usefully on a missing column", () => {
    const csv = tmp("small.csv");
    writeFileSync(csv, "a,b\n1,2\n");
    const code = main([
      "heatmap", "--csv", csv, "--x", "a", "--y", "b", "--z", "zz",
      "--out", tmp("x.svg"), "--quiet",
    ]);
    expect(code).toBe(1);
  });

  it("fails usefully on an unknown command", () => {
    expect(main(["scatter"])).toBe(1);
  });

  it("fails usefully on a missing file", () => {
    expect(main([
      "lines", "--csv", "/no/such/file.csv", "--x", "a", "--series", "b",
      "--y", "c", "--out", tmp("x.svg"),
    ])).toBe(1);
  });
});
