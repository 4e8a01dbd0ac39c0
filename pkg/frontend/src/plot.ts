/** Overlay plotting of sweep CSVs: validation + rendering. */

import { writeFileSync } from "node:fs";

import { defaultLabel, readSweep, SweepTable } from "./csv.js";
import { renderSvg, Series } from "./svg.js";

export type Quantity = "T" | "F";

export interface PlotRequest {
  inputCsvs: string[];
  output: string;
  quantity: Quantity;
  labels?: string[];
  title?: string;
}

export class PlotDataError extends Error {}

export function buildSeries(tables: SweepTable[], quantity: Quantity, labels?: string[]): Series[] {
  if (tables.length === 0) throw new PlotDataError("no input sweeps given");
  const base = tables[0].beta;
  for (const [i, t] of tables.entries()) {
    if (!t.columns.includes(quantity)) {
      throw new PlotDataError(`input ${i} has no ${quantity} column`);
    }
    if (t.beta.length !== base.length || t.beta.some((v, j) => v !== base[j])) {
      throw new PlotDataError(`input ${i} uses a different beta grid than input 0`);
    }
  }
  return tables.map((t, i) => ({
    label: labels?.[i] ?? defaultLabel(t),
    x: t.beta,
    y: t.data.get(quantity)!,
  }));
}

export function render(req: PlotRequest): string {
  if (req.inputCsvs.length === 0) {
    throw new PlotDataError("no input sweeps given");
  }
  const tables = req.inputCsvs.map(readSweep);
  const series = buildSeries(tables, req.quantity, req.labels);
  const svg = renderSvg(series, {
    xLabel: "beta (rad)",
    yLabel: req.quantity === "T" ? "T(y, beta)" : "F(y, beta)",
    title: req.title,
  });
  writeFileSync(req.output, svg, "utf8");
  return svg;
}
