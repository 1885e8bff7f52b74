#!/usr/bin/env node

/**
 * Plot `indetmatch bench` CSVs as SVG line charts.
 *
 * Usage:
 *   node out/cli.js --input results.csv --out-dir charts
 *   node out/cli.js -i results.csv -x m -o charts --group-by sigma,k1,k2
 */

import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";

import type { GroupField, XField } from "./bench.js";
import { DEFAULT_GROUP_BY, render } from "./render.js";

const HELP = `usage: cli.js --input CSV [--x n|m] [--out-dir DIR] [--group-by FIELDS]

options:
  -i, --input     bench CSV to read (required)
  -x, --x         x-axis column: n or m        [default: n]
  -o, --out-dir   directory for the SVGs       [default: charts]
      --group-by  comma-separated chart split  [default: sigma,k1,k2]
  -h, --help      show this message
`;

const GROUPABLE: readonly GroupField[] = ["sigma", "k1", "k2", "n", "m"];

export function main(argv: string[]): number {
  let values;
  try {
    values = parseArgs({
      args: argv,
      options: {
        input: { type: "string", short: "i" },
        x: { type: "string", short: "x", default: "n" },
        "out-dir": { type: "string", short: "o", default: "charts" },
        "group-by": { type: "string" },
        help: { type: "boolean", short: "h", default: false },
      },
    }).values;
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n${HELP}`);
    return 2;
  }

  if (values.help) {
    process.stdout.write(HELP);
    return 0;
  }
  if (values.input === undefined) {
    process.stderr.write(`error: --input is required\n${HELP}`);
    return 2;
  }
  if (values.x !== "n" && values.x !== "m") {
    process.stderr.write(`error: --x must be n or m, got ${JSON.stringify(values.x)}\n`);
    return 2;
  }
  let groupBy = DEFAULT_GROUP_BY;
  if (values["group-by"] !== undefined) {
    const fields = values["group-by"] === "" ? [] : values["group-by"].split(",");
    for (const f of fields) {
      if (!GROUPABLE.includes(f as GroupField)) {
        process.stderr.write(`error: unknown group-by field ${JSON.stringify(f)}\n`);
        return 2;
      }
    }
    groupBy = fields as GroupField[];
  }

  try {
    const written = render({
      input: values.input,
      xField: values.x as XField,
      outDir: values["out-dir"],
      groupBy,
    });
    for (const path of written) {
      process.stdout.write(`${path}\n`);
    }
    return 0;
  } catch (err) {
    // SchemaMismatch, EmptyInput and fs errors all land here
    if (err instanceof Error) {
      process.stderr.write(`error: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
}

const invokedPath = process.argv[1];
if (invokedPath !== undefined && import.meta.url === pathToFileURL(invokedPath).href) {
  process.exitCode = main(process.argv.slice(2));
}
