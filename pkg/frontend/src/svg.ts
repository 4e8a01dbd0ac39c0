/**
 * Minimal dependency-free SVG line plots.
 *
 * The rendered figure embeds the exact input series as JSON inside a
 * <metadata> element: plotted data can be recovered bit for bit (JS number
 * serialization is shortest-round-trip), which the tests use to prove the
 * renderer never resamples or smooths.
 */

export interface Series {
  label: string;
  x: number[];
  y: number[];
}

export interface Axes {
  xLabel: string;
  yLabel: string;
  title?: string;
}

const WIDTH = 860;
const HEIGHT = 520;
const MARGIN = { left: 90, right: 24, top: 40, bottom: 56 };
const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

interface Scale {
  (v: number): number;
  invert(p: number): number;
}

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const k = (r1 - r0) / (d1 - d0);
  const f = ((v: number) => r0 + (v - d0) * k) as Scale;
  f.invert = (p: number) => d0 + (p - r0) / k;
  return f;
}

/** Tick positions at roughly n "nice" steps covering [lo, hi]. */
export function niceTicks(lo: number, hi: number, n = 6): number[] {
  if (!(hi > lo)) return [lo];
  const raw = (hi - lo) / n;
  const mag = 10 ** Math.floor(Math.log10(raw));
  const steps = [1, 2, 2.5, 5, 10];
  const step = mag * steps.find((s) => mag * s >= raw)!;
  const first = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = first; v <= hi + step * 1e-9; v += step) out.push(v);
  return out;
}

const PI = Math.PI;

function xTickLabel(v: number): string {
  const half = Math.round(v / (PI / 2));
  if (Math.abs(v - half * (PI / 2)) < 1e-9) {
    return ["0", "π/2", "π", "3π/2", "2π"][half] ?? `${half / 2}π`;
  }
  return formatTick(v);
}

function formatTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e-3 && a < 1e4) return String(Number(v.toPrecision(6)));
  return v.toExponential(2);
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderSvg(series: Series[], axes: Axes): string {
  if (series.length === 0) throw new Error("no series to plot");
  const xs = series[0].x;
  let yLo = Infinity;
  let yHi = -Infinity;
  for (const s of series) {
    for (const v of s.y) {
      if (v < yLo) yLo = v;
      if (v > yHi) yHi = v;
    }
  }
  if (yLo === yHi) {
    yLo -= 1;
    yHi += 1;
  }
  const pad = 0.05 * (yHi - yLo);
  yLo -= pad;
  yHi += pad;
  const x0 = Math.min(...xs);
  const x1 = Math.max(...xs);
  const sx = linearScale(x0, x1, MARGIN.left, WIDTH - MARGIN.right);
  const sy = linearScale(yLo, yHi, HEIGHT - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="13">`,
  );
  parts.push(
    `<metadata id="plot-data">${esc(
      JSON.stringify({
        xLabel: axes.xLabel,
        yLabel: axes.yLabel,
        series: series.map((s) => ({ label: s.label, x: s.x, y: s.y })),
      }),
    )}</metadata>`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  // frame and grid
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#333" stroke-width="1"/>`,
  );
  // x ticks on quarter turns when the domain looks like an angle sweep
  const xticks =
    x1 - x0 > 3 ? [0, PI / 2, PI, (3 * PI) / 2, 2 * PI].filter((v) => v >= x0 && v <= x1)
                : niceTicks(x0, x1);
  for (const v of xticks) {
    const px = sx(v);
    parts.push(
      `<line x1="${px}" y1="${HEIGHT - MARGIN.bottom}" x2="${px}" ` +
        `y2="${HEIGHT - MARGIN.bottom + 6}" stroke="#333"/>`,
      `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${HEIGHT - MARGIN.bottom}" ` +
        `stroke="#ddd" stroke-width="0.5"/>`,
      `<text x="${px}" y="${HEIGHT - MARGIN.bottom + 22}" text-anchor="middle">` +
        `${esc(xTickLabel(v))}</text>`,
    );
  }
  for (const v of niceTicks(yLo, yHi)) {
    const py = sy(v);
    parts.push(
      `<line x1="${MARGIN.left - 6}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="#333"/>`,
      `<line x1="${MARGIN.left}" y1="${py}" x2="${WIDTH - MARGIN.right}" y2="${py}" ` +
        `stroke="#ddd" stroke-width="0.5"/>`,
      `<text x="${MARGIN.left - 10}" y="${py + 4}" text-anchor="end">${formatTick(v)}</text>`,
    );
  }
  // zero line, when visible
  if (yLo < 0 && yHi > 0) {
    const py = sy(0);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${py}" x2="${WIDTH - MARGIN.right}" y2="${py}" ` +
        `stroke="#999" stroke-width="0.8" stroke-dasharray="4 3"/>`,
    );
  }

  for (const [i, s] of series.entries()) {
    const pts = s.x.map((v, j) => `${sx(v)},${sy(s.y[j])}`).join(" ");
    parts.push(
      `<polyline id="series-${i}" points="${pts}" fill="none" ` +
        `stroke="${COLORS[i % COLORS.length]}" stroke-width="1.8"/>`,
    );
  }

  // legend
  const lx = MARGIN.left + 12;
  for (const [i, s] of series.entries()) {
    const ly = MARGIN.top + 16 + 18 * i;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 26}" y2="${ly - 4}" ` +
        `stroke="${COLORS[i % COLORS.length]}" stroke-width="2.5"/>`,
      `<text x="${lx + 32}" y="${ly}">${esc(s.label)}</text>`,
    );
  }

  if (axes.title) {
    parts.push(
      `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="16">` +
        `${esc(axes.title)}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 12}" text-anchor="middle">` +
      `${esc(axes.xLabel)}</text>`,
    `<text x="20" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 20 ${MARGIN.top + plotH / 2})">${esc(axes.yLabel)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n");
}

/** Recover the exact embedded series from a rendered figure. */
export function extractEmbedded(svg: string): { xLabel: string; yLabel: string; series: Series[] } {
  const m = svg.match(/<metadata id="plot-data">([\s\S]*?)<\/metadata>/);
  if (!m) throw new Error("no embedded plot data found");
  const unescaped = m[1].replace(/&lt;/g, "<").replace(/&gt;/g, ">").replace(/&amp;/g, "&");
  return JSON.parse(unescaped);
}
