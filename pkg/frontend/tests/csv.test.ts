import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { CsvFormatError, parseSweep, readSweep, defaultLabel } from "../src/csv.js";

const FIXTURES = join(__dirname, "..", "fixtures");

describe("sweep CSV parsing", () => {
  it("reads a single-gear sweep", () => {
    const t = readSweep(join(FIXTURES, "open_y5.csv"));
    expect(t.meta.kind).toBe("open-gear");
    expect(t.meta.y).toBe(5);
    expect(t.meta.mMax).toBe(6);
    expect(t.meta.relTol).toBeCloseTo(1e-7);
    expect(t.columns).toEqual(["beta", "F", "T"]);
    expect(t.beta.length).toBe(64);
    for (let i = 1; i < t.beta.length; i++) {
      expect(t.beta[i]).toBeGreaterThan(t.beta[i - 1]);
    }
    const F = t.data.get("F")!;
    expect(F.every((v) => v < 0)).toBe(true);
    expect(t.data.get("T")![0]).toBe(0);
  });

  it("round-trips 17-digit values exactly", () => {
    const text = readFileSync(join(FIXTURES, "open_y10.csv"), "utf8");
    const t = parseSweep(text);
    const rows = text.split("\n").filter((ln) => ln && !ln.startsWith("#")).slice(1);
    rows.forEach((ln, i) => {
      const f = Number(ln.split(",")[1]);
      expect(t.data.get("F")![i]).toBe(f);
    });
  });

  it("derives a legend label from metadata", () => {
    const t = readSweep(join(FIXTURES, "conc_y3.csv"));
    expect(defaultLabel(t)).toBe("concentric y=3 (m_max=16)");
  });

  it("rejects foreign headers", () => {
    expect(() => parseSweep("# other tool\nbeta,F,T\n0,1,2\n")).toThrow(CsvFormatError);
  });

  it("rejects ragged rows", () => {
    const text = "# casimir-gear v0.1.0 kind=open-gear y=5 m_max=6 rel_tol=1e-07\nbeta,F,T\n0,1\n";
    expect(() => parseSweep(text)).toThrow(CsvFormatError);
  });

  it("rejects non-numeric cells", () => {
    const text = "# casimir-gear v0.1.0 kind=open-gear y=5 m_max=6 rel_tol=1e-07\nbeta,F,T\n0,nope,2\n";
    expect(() => parseSweep(text)).toThrow(CsvFormatError);
  });
});
