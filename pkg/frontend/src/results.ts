// Result panel rendering. Pure string templates over the report document so
// the view is trivially testable; every number shown is taken verbatim from
// the API response.

import { describeDelta, diffOrders } from "./diff.js";
import { renderSectionChart } from "./section.js";
import { BranchReport, ReportDocument } from "./types.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
}

function vectorRow(labels: string[], vector: number[], ranking: string): string {
  const cells = vector.map((v) => `<td>${v}</td>`).join("");
  return (
    `<tr><td class="order">${escapeHtml(ranking)}</td>${cells}</tr>`
  );
}

function branchPanel(
  title: string,
  symbol: string,
  branch: BranchReport,
  labels: string[],
): string {
  const header = labels.map((l) => `<th>${escapeHtml(l)}</th>`).join("");
  const rows = branch.vectors
    .map((vector, i) => vectorRow(labels, vector, branch.rankings[i] ?? ""))
    .join("");
  return `
  <section class="branch">
    <h3>${title} <span class="badge">${symbol} = ${branch.delta}</span></h3>
    <p class="muted">weights: [${branch.weights.join(", ")}], μ = ${branch.mu}</p>
    <table class="vectors">
      <thead><tr><th>order</th>${header}</tr></thead>
      <tbody>${rows}</tbody>
    </table>
    <p>branch order: <strong>${escapeHtml(branch.order)}</strong></p>
  </section>`;
}

function consistencyPanel(report: ReportDocument): string {
  const items = report.consistency.alternatives
    .map(
      (value, k) =>
        `<li>${escapeHtml(report.problem.criteria[k])}: log λ = ${value}</li>`,
    )
    .join("");
  return `
  <section class="consistency">
    <h3>Consistency (log λ, 0 = consistent)</h3>
    <ul>
      <li>criteria: log λ = ${report.consistency.criteria}</li>
      ${items}
    </ul>
  </section>`;
}

function diffPanel(previousOrder: string, report: ReportDocument): string {
  const deltas = diffOrders(previousOrder, report.combined_order);
  if (deltas === null) {
    return `<section class="diff"><h3>Ranking diff</h3>
      <p>before: ${escapeHtml(previousOrder)}</p>
      <p>after: ${escapeHtml(report.combined_order)}</p></section>`;
  }
  const items = deltas
    .map((d) => `<li class="move-${d.movement}">${escapeHtml(describeDelta(d))}</li>`)
    .join("");
  return `<section class="diff"><h3>Ranking diff</h3><ul>${items}</ul></section>`;
}

export interface ResultViewOptions {
  /** combined order of the last saved solve, enables the what-if diff */
  previousOrder?: string;
}

export function renderResults(
  report: ReportDocument,
  options: ResultViewOptions = {},
): string {
  const labels = report.problem.alternatives;
  const parts: string[] = [];
  if (report.whatif) {
    parts.push(`<p class="whatif-banner">What-if result (not saved)</p>`);
  }
  parts.push(
    `<p class="combined">Combined order: <strong>${escapeHtml(report.combined_order)}</strong></p>`,
  );
  parts.push(
    `<p class="muted">criteria λ = ${report.weights.lambda}, ` +
      `weight cone dimension ${report.weights.essential_dim} ` +
      `(${escapeHtml(report.weights.search)} search)</p>`,
  );
  const panels: string[] = [];
  if (report.most) {
    panels.push(branchPanel("Most differentiating", "Δ", report.most, labels));
  }
  if (report.least) {
    panels.push(branchPanel("Least differentiating", "δ", report.least, labels));
  }
  parts.push(`<div class="branches">${panels.join("")}</div>`);
  if (report.baseline) {
    parts.push(
      `<p class="baseline">Classic eigenvector baseline: ` +
        `<strong>${escapeHtml(report.baseline.order)}</strong> ` +
        `<span class="muted">[${report.baseline.vector.join(", ")}]</span></p>`,
    );
  }
  parts.push(consistencyPanel(report));
  if (options.previousOrder !== undefined && report.whatif) {
    parts.push(diffPanel(options.previousOrder, report));
  }
  if (report.geometry) {
    parts.push(
      `<section class="geometry"><h3>Section at x₃ = 1</h3>` +
        renderSectionChart(report.geometry) +
        `</section>`,
    );
  }
  return parts.join("\n");
}
