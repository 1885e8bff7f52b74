import { mkdtempSync, readFileSync, readdirSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterEach, describe, expect, it } from "vitest";

import {
  CSV_HEADER,
  EmptyInput,
  SchemaMismatch,
  buildCharts,
  median,
  parseBenchCsv,
} from "../src/bench.js";
import { main } from "../src/cli.js";
import { render } from "../src/render.js";
import { renderSvg, ticks } from "../src/svg.js";

const HEADER = CSV_HEADER.join(",");
const ALGOS = ["bf", "kmp-indet", "bm-indet"];

interface RowOpts {
  algo: string;
  sigma: number;
  n: number;
  m?: number;
  k1?: number;
  k2?: number;
  trial?: number;
  time?: number;
}

function row(o: RowOpts): string {
  const m = o.m ?? 10;
  const k1 = o.k1 ?? 0;
  const k2 = o.k2 ?? 2;
  const trial = o.trial ?? 0;
  const time = o.time ?? (o.n / 1e6) * (o.algo === "bf" ? 3 : 1);
  return `${o.algo},${o.sigma},${o.n},${m},${k1},${k2},12345,${trial},${time},7,${o.n * 2}`;
}

/** sweep over n for each algo, `trials` timings per point */
function sweepCsv(sigmas: number[], ns: number[], trials = 2): string {
  const lines = [HEADER];
  for (const sigma of sigmas) {
    for (const algo of ALGOS) {
      for (const n of ns) {
        for (let trial = 0; trial < trials; trial++) {
          lines.push(row({ algo, sigma, n, trial, time: (n / 1e6) * (trial + 1) }));
        }
      }
    }
  }
  return lines.join("\n") + "\n";
}

const scratch: string[] = [];

function tmp(): string {
  const dir = mkdtempSync(join(tmpdir(), "indetmatch-plots-"));
  scratch.push(dir);
  return dir;
}

afterEach(() => {
  while (scratch.length > 0) {
    rmSync(scratch.pop()!, { recursive: true, force: true });
  }
});

describe("parseBenchCsv", () => {
  it("reads well-formed rows", () => {
    const rows = parseBenchCsv(sweepCsv([2], [1000, 2000], 1));
    expect(rows).toHaveLength(6);
    expect(rows[0]).toMatchObject({ algo: "bf", sigma: 2, n: 1000, m: 10, k1: 0, k2: 2 });
    expect(rows[0]!.seed).toBe("12345");
    expect(rows[0]!.time_s).toBeCloseTo(0.001);
  });

  it("keeps 64-bit seeds intact", () => {
    const big = "18446744073709551615";
    const text = `${HEADER}\nbf,2,10,2,0,0,${big},0,0.5,1,20\n`;
    expect(parseBenchCsv(text)[0]!.seed).toBe(big);
  });

  it("rejects an empty file", () => {
    expect(() => parseBenchCsv("")).toThrow(EmptyInput);
  });

  it("rejects a header-only file", () => {
    expect(() => parseBenchCsv(HEADER + "\n")).toThrow(EmptyInput);
  });

  it("rejects a wrong header", () => {
    const text = "algo,sigma,n\nbf,2,10\n";
    expect(() => parseBenchCsv(text)).toThrow(SchemaMismatch);
  });

  it("rejects reordered columns", () => {
    const shuffled = [...CSV_HEADER].reverse().join(",");
    expect(() => parseBenchCsv(`${shuffled}\n`)).toThrow(SchemaMismatch);
  });

  it("rejects a short row", () => {
    const text = `${HEADER}\nbf,2,10\n`;
    expect(() => parseBenchCsv(text)).toThrow(/expected 11 fields/);
  });

  it("rejects non-numeric time", () => {
    const text = `${HEADER}\nbf,2,10,2,0,0,1,0,fast,1,20\n`;
    expect(() => parseBenchCsv(text)).toThrow(SchemaMismatch);
  });

  it("rejects negative time", () => {
    const text = `${HEADER}\nbf,2,10,2,0,0,1,0,-0.5,1,20\n`;
    expect(() => parseBenchCsv(text)).toThrow(SchemaMismatch);
  });

  it("rejects fractional counts", () => {
    const text = `${HEADER}\nbf,2,10,2,0,0,1,0,0.5,1.5,20\n`;
    expect(() => parseBenchCsv(text)).toThrow(/matches/);
  });
});

describe("median", () => {
  it("takes the middle of an odd run", () => {
    expect(median([100, 1, 2])).toBe(2);
  });

  it("averages the middle pair of an even run", () => {
    expect(median([4, 1, 3, 2])).toBe(2.5);
  });

  it("refuses an empty list", () => {
    expect(() => median([])).toThrow();
  });
});

describe("buildCharts", () => {
  it("makes one chart per grouping combination", () => {
    const rows = parseBenchCsv(sweepCsv([2, 9], [1000, 2000, 3000]));
    const charts = buildCharts(rows, "n", ["sigma", "k1", "k2"]);
    expect(charts.map((c) => c.slug)).toEqual([
      "time-vs-n-sigma_2-k1_0-k2_2",
      "time-vs-n-sigma_9-k1_0-k2_2",
    ]);
    expect(charts[0]!.title).toBe("time vs n (sigma=2, k1=0, k2=2)");
  });

  it("emits one series per algorithm, sorted", () => {
    const rows = parseBenchCsv(sweepCsv([2], [1000]));
    const charts = buildCharts(rows, "n", ["sigma", "k1", "k2"]);
    expect(charts).toHaveLength(1);
    expect(charts[0]!.series.map((s) => s.algo)).toEqual(["bf", "bm-indet", "kmp-indet"]);
  });

  it("sorts points by x even when rows are shuffled", () => {
    const ns = [3000, 1000, 4000, 2000];
    const lines = [HEADER, ...ns.map((n) => row({ algo: "bf", sigma: 2, n }))];
    const charts = buildCharts(parseBenchCsv(lines.join("\n")), "n", ["sigma"]);
    expect(charts[0]!.series[0]!.points.map((p) => p.x)).toEqual([1000, 2000, 3000, 4000]);
  });

  it("aggregates trials with the median", () => {
    const lines = [
      HEADER,
      row({ algo: "bf", sigma: 2, n: 1000, trial: 0, time: 1 }),
      row({ algo: "bf", sigma: 2, n: 1000, trial: 1, time: 100 }),
      row({ algo: "bf", sigma: 2, n: 1000, trial: 2, time: 2 }),
    ];
    const charts = buildCharts(parseBenchCsv(lines.join("\n")), "n", ["sigma"]);
    expect(charts[0]!.series[0]!.points).toEqual([{ x: 1000, y: 2 }]);
  });

  it("can group on the pattern length instead", () => {
    const lines = [
      HEADER,
      row({ algo: "bf", sigma: 2, n: 1000, m: 5 }),
      row({ algo: "bf", sigma: 2, n: 1000, m: 10 }),
    ];
    const charts = buildCharts(parseBenchCsv(lines.join("\n")), "n", ["m"]);
    expect(charts.map((c) => c.slug)).toEqual(["time-vs-n-m_5", "time-vs-n-m_10"]);
  });
});

describe("ticks", () => {
  it("spans the domain with round steps", () => {
    expect(ticks(0, 10, 5)).toEqual([0, 2, 4, 6, 8, 10]);
  });

  it("collapses a degenerate domain", () => {
    expect(ticks(5, 5, 5)).toEqual([5]);
  });

  it("avoids float noise in small steps", () => {
    for (const t of ticks(0, 0.007, 5)) {
      expect(String(t).length).toBeLessThan(8);
    }
  });
});

describe("renderSvg", () => {
  const charts = buildCharts(parseBenchCsv(sweepCsv([2], [1000, 2000, 3000])), "n", ["sigma"]);

  it("draws one polyline per series plus a legend label", () => {
    const svg = renderSvg(charts[0]!, "n");
    expect(svg.match(/<polyline /g)).toHaveLength(3);
    for (const algo of ALGOS) {
      expect(svg).toContain(`data-algo="${algo}"`);
      expect(svg).toContain(`>${algo}</text>`);
    }
    expect(svg).toContain("time vs n (sigma=2)");
  });

  it("escapes markup in algorithm names", () => {
    const lines = [HEADER, row({ algo: "a<b>&c", sigma: 2, n: 1000 })];
    const chart = buildCharts(parseBenchCsv(lines.join("\n")), "n", ["sigma"])[0]!;
    const svg = renderSvg(chart, "n");
    expect(svg).toContain("a&lt;b&gt;&amp;c");
    expect(svg).not.toContain("a<b>&c");
  });

  it("handles a single-point series", () => {
    const lines = [HEADER, row({ algo: "bf", sigma: 2, n: 1000 })];
    const chart = buildCharts(parseBenchCsv(lines.join("\n")), "n", ["sigma"])[0]!;
    const svg = renderSvg(chart, "n");
    expect(svg).toContain("<circle");
  });
});

describe("render", () => {
  it("writes one SVG per sigma for a two-sigma CSV", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    writeFileSync(input, sweepCsv([2, 9], [1000, 2000, 3000]));
    const written = render({ input, xField: "n", outDir: join(dir, "charts") });
    expect(written).toHaveLength(2);
    expect(readdirSync(join(dir, "charts")).sort()).toEqual([
      "time-vs-n-sigma_2-k1_0-k2_2.svg",
      "time-vs-n-sigma_9-k1_0-k2_2.svg",
    ]);
    for (const path of written) {
      expect(readFileSync(path, "utf8").match(/<polyline /g)).toHaveLength(3);
    }
  });

  it("writes a single chart with three series for one sigma", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    writeFileSync(input, sweepCsv([2], [1000, 2000, 3000]));
    const written = render({ input, xField: "n", outDir: join(dir, "charts") });
    expect(written).toHaveLength(1);
    expect(readFileSync(written[0]!, "utf8").match(/<polyline /g)).toHaveLength(3);
  });

  it("is byte-deterministic across runs", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    writeFileSync(input, sweepCsv([2, 9], [1000, 2000]));
    const first = render({ input, xField: "n", outDir: join(dir, "a") });
    const second = render({ input, xField: "n", outDir: join(dir, "b") });
    expect(first).toHaveLength(second.length);
    for (let i = 0; i < first.length; i++) {
      expect(readFileSync(first[i]!, "utf8")).toBe(readFileSync(second[i]!, "utf8"));
    }
  });

  it("propagates EmptyInput for a header-only CSV", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    writeFileSync(input, HEADER + "\n");
    expect(() => render({ input, xField: "n", outDir: join(dir, "charts") })).toThrow(EmptyInput);
  });

  it("rejects grouping by the x-axis field", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    writeFileSync(input, sweepCsv([2], [1000]));
    expect(() =>
      render({ input, xField: "n", outDir: join(dir, "charts"), groupBy: ["n"] }),
    ).toThrow(/cannot group by/);
  });
});

describe("cli", () => {
  it("renders charts and reports the paths", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    writeFileSync(input, sweepCsv([2, 9], [1000, 2000]));
    const out = join(dir, "charts");
    expect(main(["--input", input, "--out-dir", out])).toBe(0);
    expect(readdirSync(out)).toHaveLength(2);
  });

  it("accepts m as the x axis", () => {
    const dir = tmp();
    const input = join(dir, "bench.csv");
    const lines = [
      HEADER,
      row({ algo: "bf", sigma: 2, n: 1000, m: 5 }),
      row({ algo: "bf", sigma: 2, n: 1000, m: 10 }),
    ];
    writeFileSync(input, lines.join("\n") + "\n");
    const out = join(dir, "charts");
    expect(main(["-i", input, "-x", "m", "-o", out, "--group-by", "sigma"])).toBe(0);
    expect(readdirSync(out)).toEqual(["time-vs-m-sigma_2.svg"]);
  });

  it("fails with 2 on usage errors", () => {
    expect(main([])).toBe(2);
    expect(main(["--input", "x.csv", "--x", "q"])).toBe(2);
    expect(main(["--input", "x.csv", "--group-by", "seed"])).toBe(2);
    expect(main(["--bogus"])).toBe(2);
  });

  it("fails with 1 when the input is missing", () => {
    expect(main(["--input", join(tmp(), "nope.csv")])).toBe(1);
  });
});
