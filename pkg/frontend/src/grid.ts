// Judgment grid rendering: one table per comparison matrix, inputs on the
// off-diagonal cells, diagonal locked to 1. Editing is wired up in main.ts;
// this module only produces markup and locates cells for error display.

import { Entry, ProblemDocument } from "./types.js";
import { QUICK_PICKS } from "./judgments.js";

export function entryText(entry: Entry): string {
  if (entry === null) return "";
  return typeof entry === "number" ? String(entry) : entry;
}

function gridTable(
  target: "criteria" | number,
  title: string,
  labels: string[],
  matrix: Entry[][],
): string {
  const head = labels.map((l) => `<th>${l}</th>`).join("");
  const rows = matrix
    .map((row, i) => {
      const cells = row
        .map((entry, j) => {
          if (i === j) return `<td class="diagonal">1</td>`;
          return (
            `<td><input data-target="${target}" data-i="${i}" data-j="${j}" ` +
            `value="${entryText(entry)}" size="5"/></td>`
          );
        })
        .join("");
      return `<tr><th>${labels[i]}</th>${cells}</tr>`;
    })
    .join("");
  return `
  <table class="grid" data-grid="${target}">
    <caption>${title}</caption>
    <thead><tr><th></th>${head}</tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

export function renderGrids(doc: ProblemDocument): string {
  const picks = QUICK_PICKS.map(
    (v) => `<button type="button" class="pick" data-pick="${v}">${v}</button>`,
  ).join("");
  const tables = [
    gridTable("criteria", "Criteria comparisons", doc.criteria, doc.criteria_matrix),
    ...doc.alternative_matrices.map((matrix, k) =>
      gridTable(k + 1, `Alternatives by "${doc.criteria[k]}"`, doc.alternatives, matrix),
    ),
  ];
  return (
    `<p class="muted">Positive decimals or fractions; the mirror cell updates ` +
    `automatically. Quick pick: <span class="picks">${picks}</span></p>` +
    tables.join("\n")
  );
}

export interface CellAddress {
  target: "criteria" | number;
  i: number;
  j: number;
}

/** Map a server-side validation message to the offending cell, if named. */
export function locateCellError(detail: string): CellAddress | null {
  let match = detail.match(/alternative_matrices\[(\d+)\]\[(\d+)\]\[(\d+)\]/);
  if (match) {
    return { target: Number(match[1]), i: Number(match[2]) - 1, j: Number(match[3]) - 1 };
  }
  match = detail.match(/criteria_matrix\[(\d+)\]\[(\d+)\]/);
  if (match) {
    return { target: "criteria", i: Number(match[1]) - 1, j: Number(match[2]) - 1 };
  }
  // reciprocity messages name the pair as "entries (i, j) and (j, i)"
  const entries = detail.match(/\((\d+), (\d+)\)/);
  if (!entries) return null;
  const i = Number(entries[1]) - 1;
  const j = Number(entries[2]) - 1;
  const numbered = detail.match(/alternative matrix (\d+)/);
  if (numbered) return { target: Number(numbered[1]), i, j };
  if (detail.includes("criteria")) return { target: "criteria", i, j };
  return null;
}
