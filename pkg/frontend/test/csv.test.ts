import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { CSV_HEADER, CsvFormatError, parseSweepCsv } from "../src/csv.js";

const fig2b = readFileSync(
  fileURLToPath(new URL("../testdata/fig2b.csv", import.meta.url)),
  "utf8",
);

describe("parseSweepCsv", () => {
  it("parses the fig2b artifact", () => {
    const rows = parseSweepCsv(fig2b);
    expect(rows).toHaveLength(242);
    expect(new Set(rows.map((r) => r.geometry))).toEqual(new Set(["ring", "chain"]));
    const first = rows[0];
    expect(first.geometry).toBe("chain");
    expect(first.u0OverT).toBe(-200);
    expect(first.uOverT).toBe(80);
    expect(first.kTOverT).toBe(0);
    expect(first.entropyBits).toBeCloseTo(0.851877194, 9);
    expect(first.degenerate).toBe(false);
    expect(first.gap).toBeGreaterThan(0);
  });

  it("keeps entropies on the [0, 2] scale", () => {
    for (const row of parseSweepCsv(fig2b)) {
      expect(row.entropyBits).toBeGreaterThanOrEqual(0);
      expect(row.entropyBits).toBeLessThanOrEqual(2);
    }
  });

  it("returns no rows for a header-only file", () => {
    expect(parseSweepCsv(CSV_HEADER + "\n")).toEqual([]);
  });

  it("tolerates CRLF line endings", () => {
    const text = CSV_HEADER + "\r\nring,0,0,0,1.5,-2,false,0.5\r\n";
    const rows = parseSweepCsv(text);
    expect(rows).toHaveLength(1);
    expect(rows[0].entropyBits).toBe(1.5);
  });

  it("rejects a wrong header", () => {
    expect(() => parseSweepCsv("geometry,u0\nring,0\n")).toThrowError(
      /unexpected CSV header/,
    );
  });

  it("names the line with the wrong field count", () => {
    const text = CSV_HEADER + "\nring,0,0,0,1,-2,false,1\nring,0,0\n";
    expect(() => parseSweepCsv(text)).toThrowError(/line 3: expected 8 fields/);
  });

  it("names the line with a bad number", () => {
    const text = CSV_HEADER + "\nring,zero,0,0,1,-2,false,1\n";
    expect(() => parseSweepCsv(text)).toThrowError(
      /line 2: u0_over_t is not a number/,
    );
  });

  it("rejects unknown geometries and degenerate flags", () => {
    expect(() =>
      parseSweepCsv(CSV_HEADER + "\ntorus,0,0,0,1,-2,false,1\n"),
    ).toThrowError(CsvFormatError);
    expect(() =>
      parseSweepCsv(CSV_HEADER + "\nring,0,0,0,1,-2,maybe,1\n"),
    ).toThrowError(/degenerate must be true or false/);
  });
});
