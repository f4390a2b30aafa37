// Judgment grid logic: parsing free-form positive values (decimals or
// fractions) and keeping a comparison matrix symmetrically reciprocal as the
// user edits single cells. The solver itself never runs here; this module
// only prepares documents for the API.

import { Entry, ProblemDocument } from "./types.js";

export function parseEntry(raw: string): number {
  const text = raw.trim();
  if (!text) throw new Error("empty value");
  let value: number;
  const fraction = text.match(/^(\d+(?:\.\d+)?)\s*\/\s*(\d+(?:\.\d+)?)$/);
  if (fraction) {
    const den = Number(fraction[2]);
    if (den === 0) throw new Error("division by zero");
    value = Number(fraction[1]) / den;
  } else {
    value = Number(text);
  }
  if (!Number.isFinite(value) || value <= 0) {
    throw new Error(`"${raw}" is not a positive number or fraction`);
  }
  return value;
}

export function entryValue(entry: Entry): number {
  if (entry === null) throw new Error("missing entry");
  return typeof entry === "number" ? entry : parseEntry(entry);
}

export function reciprocalOf(value: number | string): number | string {
  if (typeof value === "string") {
    const fraction = value.trim().match(/^(\d+)\s*\/\s*(\d+)$/);
    if (fraction) {
      return fraction[1] === "1" ? Number(fraction[2]) : `${fraction[2]}/${fraction[1]}`;
    }
    const whole = value.trim().match(/^(\d+)$/);
    if (whole) return whole[1] === "1" ? 1 : `1/${whole[1]}`;
    return 1 / parseEntry(value);
  }
  return value === 1 ? 1 : 1 / value;
}

/** Apply one judgment edit, auto-filling the mirror cell with the reciprocal. */
export function applyEdit(
  matrix: Entry[][],
  i: number,
  j: number,
  raw: string,
): Entry[][] {
  if (i === j) throw new Error("the diagonal is fixed at 1");
  const parsed = parseEntry(raw); // validate before touching anything
  const compact = raw.trim().replace(/\s+/g, "");
  // integers and integer fractions keep an exact rational mirror
  const exact = /^\d+(\/\d+)?$/.test(compact);
  const value: Entry = exact && compact.includes("/") ? compact : parsed;
  const next = matrix.map((row) => row.slice());
  next[i][j] = value;
  next[j][i] = reciprocalOf(exact ? compact : parsed);
  return next;
}

export function isReciprocal(matrix: Entry[][], tolerance = 1e-9): boolean {
  const n = matrix.length;
  for (let i = 0; i < n; i++) {
    if (Math.abs(entryValue(matrix[i][i]) - 1) > tolerance) return false;
    for (let j = i + 1; j < n; j++) {
      const product = entryValue(matrix[i][j]) * entryValue(matrix[j][i]);
      if (Math.abs(product - 1) > tolerance * Math.max(product, 1)) return false;
    }
  }
  return true;
}

export function matrixOf(doc: ProblemDocument, target: "criteria" | number): Entry[][] {
  return target === "criteria"
    ? doc.criteria_matrix
    : doc.alternative_matrices[target - 1];
}

/** Replace one matrix of a document, bumping nothing; server owns versions. */
export function withMatrix(
  doc: ProblemDocument,
  target: "criteria" | number,
  matrix: Entry[][],
): ProblemDocument {
  const copy: ProblemDocument = JSON.parse(JSON.stringify(doc));
  if (target === "criteria") copy.criteria_matrix = matrix;
  else copy.alternative_matrices[target - 1] = matrix;
  return copy;
}

export const QUICK_PICKS = [1, 2, 3, 4, 5, 6, 7, 8, 9] as const;
