/**
 * Reader for casimir-gear sweep CSVs.
 *
 * Format:
 *   # casimir-gear v<ver> kind=<kind> y=<y> m_max=<n> rel_tol=<tol>
 *   beta,F,T[,energy,torque]
 *   <17-significant-digit floats>...
 */

import { readFileSync } from "node:fs";

export interface SweepMeta {
  version: string;
  kind: string;
  y: number;
  mMax: number;
  relTol: number;
}

export interface SweepTable {
  meta: SweepMeta;
  columns: string[];
  /** column name -> values, row-aligned with beta */
  data: Map<string, number[]>;
  beta: number[];
}

export class CsvFormatError extends Error {}

function parseHeader(line: string): SweepMeta {
  const m = line.match(/^# casimir-gear v(\S+)\s+(.*)$/);
  if (!m) {
    throw new CsvFormatError(
      `not a casimir-gear sweep file (header: ${JSON.stringify(line.slice(0, 60))})`,
    );
  }
  const tokens = new Map<string, string>();
  for (const tok of m[2].split(/\s+/)) {
    const eq = tok.indexOf("=");
    if (eq > 0) tokens.set(tok.slice(0, eq), tok.slice(eq + 1));
  }
  const need = (key: string): string => {
    const v = tokens.get(key);
    if (v === undefined) throw new CsvFormatError(`header missing ${key}=`);
    return v;
  };
  return {
    version: m[1],
    kind: need("kind"),
    y: Number(need("y")),
    mMax: Number(need("m_max")),
    relTol: Number(need("rel_tol")),
  };
}

export function parseSweep(text: string): SweepTable {
  const lines = text.split(/\r?\n/).filter((ln) => ln.length > 0);
  if (lines.length < 3) {
    throw new CsvFormatError("sweep file needs a header, a column line and rows");
  }
  const meta = parseHeader(lines[0]);
  const columns = lines[1].split(",");
  if (columns[0] !== "beta") {
    throw new CsvFormatError(`first column must be beta, got ${columns[0]}`);
  }
  const data = new Map<string, number[]>(columns.map((c) => [c, []]));
  for (const [i, ln] of lines.slice(2).entries()) {
    const cells = ln.split(",");
    if (cells.length !== columns.length) {
      throw new CsvFormatError(`row ${i + 1}: expected ${columns.length} cells, got ${cells.length}`);
    }
    for (const [j, cell] of cells.entries()) {
      const v = Number(cell);
      if (!Number.isFinite(v)) {
        throw new CsvFormatError(`row ${i + 1}: unparseable value ${JSON.stringify(cell)}`);
      }
      data.get(columns[j])!.push(v);
    }
  }
  return { meta, columns, data, beta: data.get("beta")! };
}

export function readSweep(path: string): SweepTable {
  return parseSweep(readFileSync(path, "utf8"));
}

export function defaultLabel(t: SweepTable): string {
  return `${t.meta.kind} y=${t.meta.y} (m_max=${t.meta.mMax})`;
}
