import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { buildCharts, parseBenchCsv } from "./bench.js";
import { renderSvg } from "./svg.js";
export const DEFAULT_GROUP_BY = ["sigma", "k1", "k2"];
/**
 * Read a bench CSV and write one SVG chart per distinct grouping combination.
 * Returns the written paths in chart order.
 */
export function render(spec) {
    const groupBy = spec.groupBy ?? DEFAULT_GROUP_BY;
    if (groupBy.includes(spec.xField)) {
        throw new Error(`cannot group by the x-axis field ${spec.xField}`);
    }
    const rows = parseBenchCsv(readFileSync(spec.input, "utf8"));
    const charts = buildCharts(rows, spec.xField, groupBy);
    mkdirSync(spec.outDir, { recursive: true });
    const written = [];
    for (const chart of charts) {
        const path = join(spec.outDir, `${chart.slug}.svg`);
        writeFileSync(path, renderSvg(chart, spec.xField));
        written.push(path);
    }
    return written;
}
