import { execFileSync, spawnSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { beforeAll, describe, expect, it } from "vitest";

const ROOT = join(__dirname, "..");
const CLI = join(ROOT, "dist", "cli.js");
const FIXTURES = join(ROOT, "fixtures");

function runCli(args: string[]) {
  return spawnSync("node", [CLI, ...args], { encoding: "utf8" });
}

describe("casimir-gear-plot CLI", () => {
  beforeAll(() => {
    if (!existsSync(CLI)) {
      execFileSync("npx", ["tsc"], { cwd: ROOT });
    }
  });

  it("renders an overlay figure", () => {
    const out = join(mkdtempSync(join(tmpdir(), "cgcli-")), "fig.svg");
    const r = runCli([
      "--quantity", "T", "--title", "torque overlay",
      "-o", out,
      join(FIXTURES, "open_y5.csv"), join(FIXTURES, "open_y10.csv"),
    ]);
    expect(r.status).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("torque overlay");
  });

  it("exits 2 without inputs", () => {
    const out = join(mkdtempSync(join(tmpdir(), "cgcli-")), "fig.svg");
    expect(runCli(["-o", out]).status).toBe(2);
  });

  it("exits 2 without an output path", () => {
    expect(runCli([join(FIXTURES, "open_y5.csv")]).status).toBe(2);
  });

  it("exits 2 on unknown flags", () => {
    expect(runCli(["--frob", "x"]).status).toBe(2);
  });

  it("exits 1 on grid mismatch", () => {
    const dir = mkdtempSync(join(tmpdir(), "cgcli-"));
    const short = join(dir, "short.csv");
    const lines = readFileSync(join(FIXTURES, "open_y5.csv"), "utf8").split("\n");
    writeFileSync(short, lines.slice(0, 34).join("\n") + "\n");
    const r = runCli(["-o", join(dir, "x.svg"), join(FIXTURES, "open_y5.csv"), short]);
    expect(r.status).toBe(1);
    expect(r.stderr).toContain("beta grid");
  });

  it("exits 1 on unreadable input", () => {
    const dir = mkdtempSync(join(tmpdir(), "cgcli-"));
    const r = runCli(["-o", join(dir, "x.svg"), join(dir, "missing.csv")]);
    expect(r.status).toBe(1);
  });
});
