#!/usr/bin/env node
/**
 * Figure renderer for sweep CSVs: --kind line draws entropy curves per
 * geometry, --kind surface draws the entropy heatmap.  Exit codes: 0 ok,
 * 2 usage error, 1 bad input data or i/o failure.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { CsvFormatError, parseSweepCsv } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLinePlot } from "./linePlot.js";

const USAGE =
  "usage: hubbard-figures --input sweep.csv --kind line|surface --output figure.svg [--title TEXT]";

export type Logger = (message: string) => void;

interface Args {
  input: string;
  kind: "line" | "surface";
  output: string;
  title: string;
}

function parseArgs(argv: string[]): Args | string {
  let input: string | undefined;
  let kind: string | undefined;
  let output: string | undefined;
  let titleText = "";
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const value = argv[i + 1];
    switch (flag) {
      case "--input":
      case "--kind":
      case "--output":
      case "--title":
        if (value === undefined) {
          return `missing value for ${flag}`;
        }
        if (flag === "--input") input = value;
        else if (flag === "--kind") kind = value;
        else if (flag === "--output") output = value;
        else titleText = value;
        i++;
        break;
      default:
        return `unknown flag: ${flag}`;
    }
  }
  if (input === undefined || kind === undefined || output === undefined) {
    return "missing required flag (--input, --kind, --output)";
  }
  if (kind !== "line" && kind !== "surface") {
    return `--kind must be line or surface, got ${kind}`;
  }
  return { input, kind, output, title: titleText };
}

export function runCli(
  argv: string[],
  log: Logger = (message) => process.stderr.write(message + "\n"),
): number {
  const args = parseArgs(argv);
  if (typeof args === "string") {
    log(`error: ${args}`);
    log(USAGE);
    return 2;
  }
  let text: string;
  try {
    text = readFileSync(args.input, "utf8");
  } catch (err) {
    log(`error: cannot read ${args.input}: ${(err as Error).message}`);
    return 1;
  }
  let svg: string;
  try {
    const rows = parseSweepCsv(text);
    svg =
      args.kind === "line"
        ? renderLinePlot(rows, { title: args.title })
        : renderHeatmap(rows, { title: args.title });
  } catch (err) {
    if (err instanceof CsvFormatError) {
      log(`error: ${args.input}: ${err.message}`);
    } else {
      log(`error: ${(err as Error).message}`);
    }
    return 1;
  }
  try {
    writeFileSync(args.output, svg);
  } catch (err) {
    log(`error: cannot write ${args.output}: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

const invokedDirectly =
  typeof process.argv[1] === "string" &&
  import.meta.url === pathToFileURL(process.argv[1]).href;

if (invokedDirectly) {
  process.exit(runCli(process.argv.slice(2)));
}
