/**
 * Reader for the sweep CSV contract emitted by the hubbard-ed CLI.
 *
 * The header is fixed and every row carries one grid point; any deviation
 * raises CsvFormatError naming the offending line.
 */

export const CSV_HEADER =
  "geometry,u0_over_t,u_over_t,kT_over_t,entropy_bits,ground_energy,degenerate,gap";

export type Geometry = "ring" | "chain";

export interface SweepRow {
  geometry: Geometry;
  u0OverT: number;
  uOverT: number;
  kTOverT: number;
  entropyBits: number;
  groundEnergy: number;
  degenerate: boolean;
  gap: number;
}

export class CsvFormatError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "CsvFormatError";
  }
}

function parseNumber(field: string, name: string, lineno: number): number {
  const value = Number(field);
  if (field.trim() === "" || Number.isNaN(value)) {
    throw new CsvFormatError(`line ${lineno}: ${name} is not a number: "${field}"`);
  }
  return value;
}

export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split("\n").map((line) => line.replace(/\r$/, ""));
  if (lines.length === 0 || lines[0] !== CSV_HEADER) {
    throw new CsvFormatError(`unexpected CSV header: "${lines[0] ?? ""}"`);
  }
  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i];
    if (line === "") {
      continue;
    }
    const lineno = i + 1;
    const parts = line.split(",");
    if (parts.length !== 8) {
      throw new CsvFormatError(
        `line ${lineno}: expected 8 fields, got ${parts.length}`,
      );
    }
    const geometry = parts[0];
    if (geometry !== "ring" && geometry !== "chain") {
      throw new CsvFormatError(`line ${lineno}: unknown geometry "${geometry}"`);
    }
    if (parts[6] !== "true" && parts[6] !== "false") {
      throw new CsvFormatError(
        `line ${lineno}: degenerate must be true or false, got "${parts[6]}"`,
      );
    }
    rows.push({
      geometry,
      u0OverT: parseNumber(parts[1], "u0_over_t", lineno),
      uOverT: parseNumber(parts[2], "u_over_t", lineno),
      kTOverT: parseNumber(parts[3], "kT_over_t", lineno),
      entropyBits: parseNumber(parts[4], "entropy_bits", lineno),
      groundEnergy: parseNumber(parts[5], "ground_energy", lineno),
      degenerate: parts[6] === "true",
      gap: parseNumber(parts[7], "gap", lineno),
    });
  }
  return rows;
}
