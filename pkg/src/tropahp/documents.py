"""JSON documents: problem files, matrix files, and report rendering.

Matrix entries in documents may be JSON numbers or rational strings such as
"1/7"; rationals are evaluated exactly before conversion to float so that
reciprocal pairs survive parsing.  Reports are emitted with 12 significant
digits and no volatile fields, so identical inputs produce byte-identical
output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .ahp import DecisionProblem, SolveReport
from .core import Tolerance
from .geometry import SectionPlot, section_at_unit_last_coord

__all__ = [
    "SCHEMA_VERSION",
    "DocumentError",
    "ProblemDocument",
    "parse_entry",
    "load_problem_document",
    "load_problem",
    "emit_problem",
    "load_matrix",
    "report_to_document",
    "report_geometry",
    "render_report_text",
    "emit_report",
]

SCHEMA_VERSION = "tropahp/1"


class DocumentError(ValueError):
    """A document failed to parse or validate; the message names the field."""


def parse_entry(value, where: str = "entry") -> float:
    """Parse a matrix entry: a positive number or a rational string like '1/7'."""
    if isinstance(value, bool):
        raise DocumentError(f"{where}: booleans are not valid entries")
    if isinstance(value, (int, float)):
        result = float(value)
    elif isinstance(value, str):
        try:
            result = float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: cannot parse {value!r} as a rational") from exc
    else:
        raise DocumentError(f"{where}: expected number or rational string, got {type(value).__name__}")
    if not np.isfinite(result) or result <= 0:
        raise DocumentError(f"{where}: entries must be positive and finite, got {value!r}")
    return result


def _parse_matrix(rows, where: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError(f"{where}: expected a list of rows")
    width = len(rows[0])
    parsed = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DocumentError(f"{where}: row {i + 1} has {len(row)} entries, expected {width}")
        parsed.append([parse_entry(v, f"{where}[{i + 1}][{j + 1}]") for j, v in enumerate(row)])
    return np.array(parsed, dtype=float)


@dataclass
class ProblemDocument:
    """On-disk problem description; raw entries are kept for faithful re-emission."""

    name: str
    criteria: list[str]
    alternatives: list[str]
    criteria_matrix: list[list[object]]
    alternative_matrices: list[list[list[object]]]
    schema_version: str = SCHEMA_VERSION
    version: int = 1

    @classmethod
    def from_json_dict(cls, data, rel_eq: float = Tolerance().rel_eq) -> "ProblemDocument":
        if not isinstance(data, dict):
            raise DocumentError("problem document must be a JSON object")
        schema = data.get("schema_version", SCHEMA_VERSION)
        if schema != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {schema!r}")
        for key in ("criteria", "alternatives", "criteria_matrix", "alternative_matrices"):
            if key not in data:
                raise DocumentError(f"missing field {key!r}")
        doc = cls(
            name=str(data.get("name", "")),
            criteria=[str(c) for c in data["criteria"]],
            alternatives=[str(a) for a in data["alternatives"]],
            criteria_matrix=data["criteria_matrix"],
            alternative_matrices=data["alternative_matrices"],
            schema_version=schema,
            version=int(data.get("version", 1)),
        )
        doc.to_problem(rel_eq)  # validates shapes, entries, reciprocity
        return doc

    def to_json_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "name": self.name,
            "version": self.version,
            "criteria": list(self.criteria),
            "alternatives": list(self.alternatives),
            "criteria_matrix": self.criteria_matrix,
            "alternative_matrices": self.alternative_matrices,
        }

    def to_problem(self, rel_eq: float = Tolerance().rel_eq) -> DecisionProblem:
        c = _parse_matrix(self.criteria_matrix, "criteria_matrix")
        mats = [
            _parse_matrix(m, f"alternative_matrices[{k + 1}]")
            for k, m in enumerate(self.alternative_matrices)
        ]
        try:
            problem = DecisionProblem.create(self.criteria, self.alternatives, c, mats)
            problem.validate(rel_eq)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        return problem


def load_problem_document(path) -> ProblemDocument:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return ProblemDocument.from_json_dict(data)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}") from exc


def load_problem(path) -> DecisionProblem:
    """Load and validate a problem file."""
    return load_problem_document(path).to_problem()


def emit_problem(doc: ProblemDocument, sink) -> None:
    """Write a problem document back out, preserving the original entry forms."""
    text = json.dumps(doc.to_json_dict(), ensure_ascii=False, indent=2, sort_keys=True)
    _write_text(sink, text + "\n")


def load_matrix(path) -> np.ndarray:
    """Load a standalone matrix file: {"matrix": [[...]]} with the same entry format."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "matrix" not in data:
        raise DocumentError(f"{path}: expected an object with a 'matrix' field")
    return _parse_matrix(data["matrix"], f"{path}:matrix")


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------

def _num(x: float) -> float:
    return float(f"{float(x):.12g}")


def _vec(x) -> list[float]:
    return [_num(v) for v in np.asarray(x).ravel()]


def _mat(x) -> list[list[float]]:
    return [[_num(v) for v in row] for row in np.asarray(x)]


def _cols(x) -> list[list[float]]:
    return [_vec(np.asarray(x)[:, j]) for j in range(np.asarray(x).shape[1])]


def _section_dict(plot: SectionPlot) -> dict:
    return {
        "points": [[_num(x), _num(y)] for x, y in plot.points],
        "segments": [[[_num(a), _num(b)], [_num(c), _num(d)]] for (a, b), (c, d) in plot.segments],
        "labels": list(plot.labels),
    }


def report_geometry(report: SolveReport) -> dict:
    """x_3 = 1 sections of the priority span and both solution sets (3 alternatives only)."""
    if report.problem.n_alternatives != 3:
        raise ValueError("geometry sections are only defined for 3 alternatives")
    rel_eq = report.tolerance.rel_eq
    return {
        "priority_span": _section_dict(
            section_at_unit_last_coord(report.most.priority_generators, rel_eq)
        ),
        "most_differentiating": [
            _section_dict(section_at_unit_last_coord(block, rel_eq))
            for block in report.most.most_blocks
        ],
        "least_differentiating": _section_dict(
            section_at_unit_last_coord(report.least.least_generators, rel_eq)
        ),
    }


def _branch_dict(branch, rankings, labels, kind: str) -> dict:
    out = {
        "weights": _vec(branch.weights),
        "mu": _num(branch.mu),
        "combined_matrix": _mat(branch.combined_matrix),
        "priority_generators": _cols(branch.priority_generators),
    }
    if kind == "most":
        out["delta"] = _num(branch.delta_max)
        out["witness_pairs"] = [[k + 1, l + 1] for k, l in branch.witness_pairs]
        out["vectors"] = [_vec(v) for v in branch.most_vectors]
    else:
        out["delta"] = _num(branch.delta_min)
        out["vectors"] = [_vec(v) for v in branch.least_vectors]
    out["rankings"] = [r.render(labels) for r in rankings]
    return out


def report_to_document(report: SolveReport, mode: str = "all",
                       include_geometry: bool = True, name: str = "") -> dict:
    """Deterministic JSON rendering of a solve report, 12 significant digits."""
    problem = report.problem
    labels = problem.alternative_labels
    doc = {
        "schema_version": SCHEMA_VERSION,
        "problem": {
            "name": name,
            "criteria": list(problem.criteria_labels),
            "alternatives": list(labels),
        },
        "tolerances": {
            "rel_eq": _num(report.tolerance.rel_eq),
            "tie_tol": _num(report.tolerance.tie_tol),
        },
        "weights": {
            "lambda": _num(report.weight_cone.lambda_c),
            "essential_dim": report.weight_cone.essential_dim,
            "generators": _cols(report.weight_cone.generators),
            "search": report.weight_search,
        },
        "consistency": {
            "criteria": _num(report.consistency["criteria"]),
            "alternatives": [_num(v) for v in report.consistency["alternatives"]],
        },
        "combined_order": report.combined_order,
    }
    if mode in ("all", "most"):
        doc["most"] = _branch_dict(report.most, report.most.most_rankings, labels, "most")
        doc["most"]["order"] = report.most_order
    if mode in ("all", "least"):
        doc["least"] = _branch_dict(report.least, report.least.least_rankings, labels, "least")
        doc["least"]["order"] = report.least_order
    if report.baseline is not None:
        doc["baseline"] = {
            "vector": _vec(report.baseline_vector),
            "order": report.baseline.render(labels),
        }
    if include_geometry and problem.n_alternatives == 3:
        doc["geometry"] = report_geometry(report)
    return doc


def render_report_text(report: SolveReport, mode: str = "all") -> str:
    """Human-readable report with the ≻ / ⪰ / ≡ order notation."""
    problem = report.problem
    labels = problem.alternative_labels
    lines = [
        f"Problem: {problem.n_criteria} criteria, {problem.n_alternatives} alternatives",
        f"Criteria spectral radius lambda = {report.weight_cone.lambda_c:.12g}"
        f" (log consistency {report.consistency['criteria']:.6g})",
        f"Weight cone: essential dimension {report.weight_cone.essential_dim}"
        f" (search: {report.weight_search})",
    ]
    if mode in ("all", "most"):
        most = report.most
        lines.append(f"Most differentiating branch: mu = {most.mu:.12g}, "
                     f"Delta = {most.delta_max:.12g}")
        lines.append(f"  weights: {np.array2string(most.weights, precision=6)}")
        for vec, ranking in zip(most.most_vectors, most.most_rankings):
            lines.append(f"  x = {np.array2string(vec, precision=4)}"
                         f"  ->  {ranking.render(labels)}")
        lines.append(f"  most-differentiating order: {report.most_order}")
    if mode in ("all", "least"):
        least = report.least
        lines.append(f"Least differentiating branch: mu = {least.mu:.12g}, "
                     f"delta = {least.delta_min:.12g}")
        lines.append(f"  weights: {np.array2string(least.weights, precision=6)}")
        for vec, ranking in zip(least.least_vectors, least.least_rankings):
            lines.append(f"  x = {np.array2string(vec, precision=4)}"
                         f"  ->  {ranking.render(labels)}")
        lines.append(f"  least-differentiating order: {report.least_order}")
    lines.append(f"Combined order: {report.combined_order}")
    if report.baseline is not None:
        lines.append(f"Baseline (classic eigenvector AHP): {report.baseline.render(labels)}")
    return "\n".join(lines) + "\n"


def emit_report(document: dict, sink=None) -> str:
    """Serialize a report document; writes to sink when given, returns the text."""
    text = json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    if sink is not None:
        _write_text(sink, text)
    return text


def _write_text(sink, text: str) -> None:
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        Path(sink).write_text(text, encoding="utf-8")
