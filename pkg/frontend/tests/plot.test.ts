import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { readSweep } from "../src/csv.js";
import { buildSeries, PlotDataError, render } from "../src/plot.js";
import { extractEmbedded, niceTicks } from "../src/svg.js";

const FIXTURES = join(__dirname, "..", "fixtures");
const OPEN5 = join(FIXTURES, "open_y5.csv");
const OPEN10 = join(FIXTURES, "open_y10.csv");
const TWOCOG = join(FIXTURES, "open_y10_2cog.csv");

function tmpOut(name: string): string {
  return join(mkdtempSync(join(tmpdir(), "cgplot-")), name);
}

describe("rendering", () => {
  it("round-trips plotted values exactly (no resampling)", () => {
    const out = tmpOut("overlay.svg");
    const svg = render({ inputCsvs: [OPEN5, OPEN10], output: out, quantity: "T" });
    expect(readFileSync(out, "utf8")).toBe(svg);
    const embedded = extractEmbedded(svg);
    expect(embedded.series.length).toBe(2);
    for (const [i, path] of [OPEN5, OPEN10].entries()) {
      const t = readSweep(path);
      expect(embedded.series[i].x).toEqual(t.beta);
      expect(embedded.series[i].y).toEqual(t.data.get("T"));
    }
    // every input row appears as one polyline vertex
    const pts = svg.match(/<polyline id="series-0" points="([^"]*)"/)![1];
    expect(pts.split(" ").length).toBe(64);
  });

  it("plots F when asked", () => {
    const svg = render({ inputCsvs: [OPEN5], output: tmpOut("f.svg"), quantity: "F" });
    const emb = extractEmbedded(svg);
    expect(emb.yLabel).toContain("F");
    const t = readSweep(OPEN5);
    expect(emb.series[0].y).toEqual(t.data.get("F"));
  });

  it("single-cog torque curves carry the expected shape", () => {
    // odd about beta = pi, zero at 0, one extremum per half-period
    for (const path of [OPEN5, OPEN10]) {
      const svg = render({ inputCsvs: [path], output: tmpOut("s.svg"), quantity: "T" });
      const T = extractEmbedded(svg).series[0].y;
      const scale = Math.max(...T.map(Math.abs));
      expect(T[0]).toBe(0);
      for (let k = 1; k < 64; k++) {
        expect(Math.abs(T[64 - k] + T[k])).toBeLessThan(1e-9 * scale);
      }
      const half = T.slice(1, 32);
      const sgn = half.slice(1).map((v, i) => Math.sign(v - half[i]));
      const extrema = sgn.slice(1).filter((s, i) => s !== sgn[i]).length;
      expect(extrema).toBe(1);
    }
  });

  it("two-cog torque has period pi", () => {
    const svg = render({ inputCsvs: [TWOCOG], output: tmpOut("t.svg"), quantity: "T" });
    const T = extractEmbedded(svg).series[0].y;
    const scale = Math.max(...T.map(Math.abs));
    for (let k = 0; k < 64; k++) {
      expect(Math.abs(T[(k + 32) % 64] - T[k])).toBeLessThan(1e-9 * scale);
    }
  });

  it("applies custom labels in order", () => {
    const svg = render({
      inputCsvs: [OPEN5, OPEN10],
      output: tmpOut("l.svg"),
      quantity: "T",
      labels: ["first", "second"],
    });
    expect(svg).toContain(">first</text>");
    expect(svg).toContain(">second</text>");
  });

  it("rejects an empty overlay list", () => {
    expect(() => render({ inputCsvs: [], output: tmpOut("e.svg"), quantity: "T" }))
      .toThrow(PlotDataError);
  });

  it("rejects mismatched beta grids", () => {
    const t = readFileSync(OPEN5, "utf8");
    const lines = t.split("\n");
    const shorter = lines.slice(0, 2).concat(lines.slice(2, 34)).join("\n") + "\n";
    const other = tmpOut("short.csv");
    writeFileSync(other, shorter);
    expect(() => render({ inputCsvs: [OPEN5, other], output: tmpOut("m.svg"), quantity: "T" }))
      .toThrow(PlotDataError);
  });

  it("rejects a missing quantity column", () => {
    const text =
      "# casimir-gear v0.1.0 kind=open-gear y=5 m_max=6 rel_tol=1e-07\nbeta,F\n0,-1\n1,-2\n";
    const path = tmpOut("nof.csv");
    writeFileSync(path, text);
    expect(() => buildSeries([readSweep(path)], "T")).toThrow(PlotDataError);
  });
});

describe("tick helper", () => {
  it("covers the domain with nice steps", () => {
    const ticks = niceTicks(-8.3e-6, 1.2e-6);
    expect(ticks.length).toBeGreaterThan(3);
    expect(ticks[0]).toBeGreaterThanOrEqual(-8.3e-6);
    expect(ticks[ticks.length - 1]).toBeLessThanOrEqual(1.2e-6 + 1e-12);
  });
});
