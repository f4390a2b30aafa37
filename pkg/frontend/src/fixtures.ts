// Bundled example problems, byte-for-byte the documents shipped with the
// backend under fixtures/.

import { ProblemDocument } from "./types.js";

export const VACATION: ProblemDocument = {
  schema_version: "tropahp/1",
  name: "vacation",
  version: 1,
  criteria: ["cost", "sightseeing", "entertainment", "travel", "eating"],
  alternatives: ["S", "Q", "D", "C"],
  criteria_matrix: [
    [1, "1/5", "1/5", 1, "1/3"],
    [5, 1, "1/5", "1/5", 1],
    [5, 5, 1, "1/5", 1],
    [1, 5, 5, 1, 5],
    [3, 1, 1, "1/5", 1],
  ],
  alternative_matrices: [
    [
      [1, 3, 7, 9],
      ["1/3", 1, 6, 7],
      ["1/7", "1/6", 1, 3],
      ["1/9", "1/7", "1/3", 1],
    ],
    [
      [1, "1/5", "1/6", "1/4"],
      [5, 1, 2, 4],
      [6, "1/2", 1, 6],
      [4, "1/4", "1/6", 1],
    ],
    [
      [1, 7, 7, "1/2"],
      ["1/7", 1, 1, "1/7"],
      ["1/7", 1, 1, "1/7"],
      [2, 7, 7, 1],
    ],
    [
      [1, 4, "1/4", "1/3"],
      ["1/4", 1, "1/2", 3],
      [4, 2, 1, 3],
      [3, "1/3", "1/3", 1],
    ],
    [
      [1, 1, 7, 4],
      [1, 1, 6, 3],
      ["1/7", "1/6", 1, "1/4"],
      ["1/4", "1/3", 4, 1],
    ],
  ],
};

export const SCHOOL: ProblemDocument = {
  schema_version: "tropahp/1",
  name: "school",
  version: 1,
  criteria: [
    "learning",
    "friends",
    "school life",
    "vocational training",
    "college preparation",
    "music classes",
  ],
  alternatives: ["A", "B", "C"],
  criteria_matrix: [
    [1, 4, 3, 1, 3, 4],
    ["1/4", 1, 7, 3, "1/5", 1],
    ["1/3", "1/7", 1, "1/5", "1/5", "1/6"],
    [1, "1/3", 5, 1, 1, "1/3"],
    ["1/3", 5, 5, 1, 1, 3],
    ["1/4", 1, 6, 3, "1/3", 1],
  ],
  alternative_matrices: [
    [
      [1, "1/3", "1/2"],
      [3, 1, 3],
      [2, "1/3", 1],
    ],
    [
      [1, 1, 1],
      [1, 1, 1],
      [1, 1, 1],
    ],
    [
      [1, 5, 1],
      ["1/5", 1, "1/5"],
      [1, 5, 1],
    ],
    [
      [1, 9, 7],
      ["1/9", 1, "1/5"],
      ["1/7", 5, 1],
    ],
    [
      [1, "1/2", 1],
      [2, 1, 2],
      [1, "1/2", 1],
    ],
    [
      [1, 6, 4],
      ["1/6", 1, "1/3"],
      ["1/4", 3, 1],
    ],
  ],
};

export const EXAMPLES: Record<string, ProblemDocument> = {
  vacation: VACATION,
  school: SCHOOL,
};
