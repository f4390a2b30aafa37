// JSON shapes exchanged with the HTTP API. Matrix entries travel as numbers
// or rational strings ("1/7"); null marks a cell the server should fill with
// the reciprocal of its mirror.

export type Entry = number | string | null;

export interface ProblemDocument {
  schema_version: string;
  name: string;
  version: number;
  criteria: string[];
  alternatives: string[];
  criteria_matrix: Entry[][];
  alternative_matrices: Entry[][][];
}

export interface BranchReport {
  weights: number[];
  mu: number;
  combined_matrix: number[][];
  priority_generators: number[][];
  delta: number;
  witness_pairs?: number[][];
  vectors: number[][];
  rankings: string[];
  order: string;
}

export interface SectionPlot {
  points: number[][];
  segments: number[][][];
  labels: string[];
}

export interface GeometryReport {
  priority_span: SectionPlot;
  most_differentiating: SectionPlot[];
  least_differentiating: SectionPlot;
}

export interface ReportDocument {
  schema_version: string;
  problem: { name: string; criteria: string[]; alternatives: string[] };
  tolerances: { rel_eq: number; tie_tol: number };
  weights: {
    lambda: number;
    essential_dim: number;
    generators: number[][];
    search: string;
  };
  consistency: { criteria: number; alternatives: number[] };
  combined_order: string;
  most?: BranchReport;
  least?: BranchReport;
  baseline?: { vector: number[]; order: string };
  geometry?: GeometryReport;
  whatif?: boolean;
}

export interface JudgmentOverride {
  matrix: "criteria" | number;
  i: number;
  j: number;
  value: number | string;
}
