/**
 * casimir-gear-plot: sweep CSVs in, SVG figure out.
 *
 * Usage:
 *   casimir-gear-plot [--quantity T|F] [--label NAME]... [--title TEXT]
 *                     -o out.svg sweep1.csv [sweep2.csv ...]
 *
 * Exit codes: 0 ok, 1 data error, 2 usage error.
 */

import { CsvFormatError } from "./csv.js";
import { PlotDataError, Quantity, render } from "./plot.js";

function usage(msg?: string): never {
  if (msg) process.stderr.write(`error: ${msg}\n`);
  process.stderr.write(
    "usage: casimir-gear-plot [--quantity T|F] [--label NAME]... " +
      "[--title TEXT] -o out.svg sweep.csv [...]\n",
  );
  process.exit(2);
}

export function main(argv: string[]): number {
  const inputs: string[] = [];
  const labels: string[] = [];
  let output: string | undefined;
  let quantity: Quantity = "T";
  let title: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    const next = (): string => {
      if (i + 1 >= argv.length) usage(`${a} needs a value`);
      return argv[++i];
    };
    if (a === "-o" || a === "--output") output = next();
    else if (a === "--quantity") {
      const q = next();
      if (q !== "T" && q !== "F") usage(`--quantity must be T or F, got ${q}`);
      quantity = q;
    } else if (a === "--label") labels.push(next());
    else if (a === "--title") title = next();
    else if (a === "-h" || a === "--help") usage();
    else if (a.startsWith("-")) usage(`unknown flag ${a}`);
    else inputs.push(a);
  }
  if (!output) usage("missing -o/--output");
  if (inputs.length === 0) usage("no input sweeps given");
  try {
    render({ inputCsvs: inputs, output, quantity, labels: labels.length ? labels : undefined, title });
  } catch (err) {
    if (err instanceof PlotDataError || err instanceof CsvFormatError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      process.stderr.write(`error: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
  process.stderr.write(`wrote ${output} (${inputs.length} series, ${quantity})\n`);
  return 0;
}

process.exit(main(process.argv.slice(2)));
