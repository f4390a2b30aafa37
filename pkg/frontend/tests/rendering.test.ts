import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { VACATION } from "../src/fixtures.js";
import { locateCellError, renderGrids } from "../src/grid.js";
import { renderResults } from "../src/results.js";
import { renderSectionChart } from "../src/section.js";
import { ReportDocument } from "../src/types.js";

const SCHOOL_REPORT: ReportDocument = JSON.parse(
  readFileSync(new URL("./fixtures/school_report.json", import.meta.url), "utf-8"),
);
const VACATION_REPORT: ReportDocument = JSON.parse(
  readFileSync(new URL("./fixtures/vacation_report.json", import.meta.url), "utf-8"),
);

describe("renderGrids", () => {
  const html = renderGrids(VACATION);

  it("renders one table per matrix with editable off-diagonal cells", () => {
    expect(html.match(/<table class="grid"/g)).toHaveLength(6);
    expect(html).toContain('data-target="criteria"');
    expect(html).toContain('data-target="5"');
  });

  it("locks the diagonal", () => {
    // 5 diagonal cells in the criteria grid plus 4 in each of the 5 others
    expect(html.match(/class="diagonal"/g)!.length).toBe(5 + 5 * 4);
  });

  it("shows raw fraction strings in inputs", () => {
    expect(html).toContain('value="1/5"');
  });

  it("offers the 1-9 quick picks", () => {
    for (let v = 1; v <= 9; v++) {
      expect(html).toContain(`data-pick="${v}"`);
    }
  });
});

describe("locateCellError", () => {
  it("finds parse errors in the criteria matrix", () => {
    expect(locateCellError("criteria_matrix[1][2]: cannot parse '4/0'")).toEqual({
      target: "criteria",
      i: 0,
      j: 1,
    });
  });

  it("finds parse errors in an alternative matrix", () => {
    expect(locateCellError("alternative_matrices[3][2][1]: bad value")).toEqual({
      target: 3,
      i: 1,
      j: 0,
    });
  });

  it("finds reciprocity violations", () => {
    const detail =
      "alternative matrix 2: entries (1, 2) and (2, 1) are not reciprocal: 2 * 3 != 1";
    expect(locateCellError(detail)).toEqual({ target: 2, i: 0, j: 1 });
  });

  it("gives up on unrelated messages", () => {
    expect(locateCellError("something else entirely")).toBeNull();
  });
});

describe("renderResults", () => {
  it("shows badges, baseline and consistency", () => {
    const html = renderResults(VACATION_REPORT);
    expect(html).toContain("Most differentiating");
    expect(html).toContain("Least differentiating");
    expect(html).toContain(`Δ = ${VACATION_REPORT.most!.delta}`);
    expect(html).toContain(`δ = ${VACATION_REPORT.least!.delta}`);
    expect(html).toContain("Classic eigenvector baseline");
    expect(html).toContain("log λ");
    expect(html).not.toContain("Ranking diff");
  });

  it("renders the section chart only when geometry is present", () => {
    const school = renderResults(SCHOOL_REPORT);
    expect(school).toContain("<svg");
    const vacation = renderResults(VACATION_REPORT);
    expect(vacation).not.toContain("<svg");
  });
});

describe("renderSectionChart", () => {
  it("draws points and segments from the geometry report", () => {
    const svg = renderSectionChart(SCHOOL_REPORT.geometry!);
    expect(svg).toContain("<svg");
    expect(svg).toContain("<circle");
    expect(svg.match(/<line/g)!.length).toBeGreaterThan(2); // axes plus spans
  });
});
