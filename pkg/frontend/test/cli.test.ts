import { existsSync, mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import { afterAll, describe, expect, it } from "vitest";

import { runCli } from "../src/cli.js";
import { CSV_HEADER } from "../src/csv.js";

const fig2b = fileURLToPath(new URL("../testdata/fig2b.csv", import.meta.url));
const fig3a = fileURLToPath(new URL("../testdata/fig3a.csv", import.meta.url));

const workdir = mkdtempSync(join(tmpdir(), "figures-"));
afterAll(() => rmSync(workdir, { recursive: true, force: true }));

function invoke(...argv: string[]): { code: number; log: string[] } {
  const log: string[] = [];
  const code = runCli(argv, (message) => log.push(message));
  return { code, log };
}

describe("runCli", () => {
  it("renders the fig2b line plot", () => {
    const out = join(workdir, "fig2b.svg");
    const { code, log } = invoke("--input", fig2b, "--kind", "line", "--output", out);
    expect(code).toBe(0);
    expect(log).toEqual([]);
    const svg = readFileSync(out, "utf8");
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain('class="series ring"');
  });

  it("renders the fig3a heatmap", () => {
    const out = join(workdir, "fig3a.svg");
    const { code } = invoke(
      "--input", fig3a, "--kind", "surface", "--output", out, "--title", "kT/t = 0",
    );
    expect(code).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg).toContain('class="cell"');
    expect(svg).toContain("kT/t = 0");
  });

  it("fails on a header-only file and writes nothing", () => {
    const input = join(workdir, "empty.csv");
    writeFileSync(input, CSV_HEADER + "\n");
    const out = join(workdir, "empty.svg");
    const { code, log } = invoke("--input", input, "--kind", "line", "--output", out);
    expect(code).toBe(1);
    expect(log.join(" ")).toMatch(/no data rows/);
    expect(existsSync(out)).toBe(false);
  });

  it("names the bad row of a malformed file", () => {
    const input = join(workdir, "broken.csv");
    writeFileSync(input, CSV_HEADER + "\nring,0,0,0,1,-2,false,1\nring,7\n");
    const out = join(workdir, "broken.svg");
    const { code, log } = invoke("--input", input, "--kind", "line", "--output", out);
    expect(code).toBe(1);
    expect(log.join(" ")).toMatch(/line 3/);
    expect(existsSync(out)).toBe(false);
  });

  it("reports usage errors as exit 2", () => {
    expect(invoke().code).toBe(2);
    expect(invoke("--input", fig2b, "--kind", "line").code).toBe(2);
    expect(
      invoke("--input", fig2b, "--kind", "pie", "--output", "x.svg").code,
    ).toBe(2);
    expect(invoke("--frobnicate").code).toBe(2);
    expect(invoke("--input").code).toBe(2);
  });

  it("rejects a two-geometry file for the surface kind", () => {
    const out = join(workdir, "mixed.svg");
    const { code, log } = invoke("--input", fig2b, "--kind", "surface", "--output", out);
    expect(code).toBe(1);
    expect(log.join(" ")).toMatch(/single geometry/);
    expect(existsSync(out)).toBe(false);
  });

  it("reports unreadable input as exit 1", () => {
    const { code, log } = invoke(
      "--input", join(workdir, "missing.csv"), "--kind", "line",
      "--output", join(workdir, "x.svg"),
    );
    expect(code).toBe(1);
    expect(log.join(" ")).toMatch(/cannot read/);
  });
});
