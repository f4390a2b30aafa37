// Application shell: session state, grid editing, solve and what-if flows.
// All solver math happens server-side; this file only moves documents and
// reports between the API and the DOM.

import { ApiClient, ApiError } from "./api.js";
import { EXAMPLES } from "./fixtures.js";
import { locateCellError, renderGrids } from "./grid.js";
import { applyEdit, matrixOf, withMatrix } from "./judgments.js";
import { renderResults } from "./results.js";
import { JudgmentOverride, ProblemDocument, ReportDocument } from "./types.js";

interface AppState {
  sessionId: string | null;
  doc: ProblemDocument | null;
  lastSavedReport: ReportDocument | null;
  pendingOverrides: JudgmentOverride[];
}

const state: AppState = {
  sessionId: null,
  doc: null,
  lastSavedReport: null,
  pendingOverrides: [],
};

const api = new ApiClient("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setStatus(message: string, isError = false): void {
  const status = el<HTMLElement>("status");
  status.textContent = message;
  status.classList.toggle("error", isError);
}

function markCellError(detail: string): void {
  const address = locateCellError(detail);
  if (!address) return;
  const selector =
    `input[data-target="${address.target}"]` +
    `[data-i="${address.i}"][data-j="${address.j}"]`;
  const input = document.querySelector<HTMLInputElement>(selector);
  if (input) {
    input.classList.add("cell-error");
    input.title = detail;
    input.focus();
  }
}

function clearCellErrors(): void {
  document
    .querySelectorAll(".cell-error")
    .forEach((node) => node.classList.remove("cell-error"));
}

function renderDoc(): void {
  if (!state.doc) return;
  el<HTMLElement>("grids").innerHTML = renderGrids(state.doc);
  el<HTMLElement>("session-label").textContent = state.sessionId
    ? `session ${state.sessionId} (v${state.doc.version})`
    : "no session";
}

async function loadExample(name: string): Promise<void> {
  const doc = EXAMPLES[name];
  if (!doc) return;
  try {
    const created = await api.createProblem(doc);
    state.sessionId = created.id;
    state.doc = await api.getProblem(created.id);
    state.lastSavedReport = null;
    state.pendingOverrides = [];
    el<HTMLElement>("results").innerHTML = "";
    renderDoc();
    setStatus(`loaded "${name}" into session ${created.id}`);
  } catch (err) {
    setStatus(err instanceof Error ? err.message : String(err), true);
  }
}

async function saveEdit(target: "criteria" | number, i: number, j: number,
                        raw: string): Promise<void> {
  if (!state.doc || !state.sessionId) return;
  clearCellErrors();
  let updated: ProblemDocument;
  try {
    const matrix = applyEdit(matrixOf(state.doc, target), i, j, raw);
    updated = withMatrix(state.doc, target, matrix);
  } catch (err) {
    setStatus(err instanceof Error ? err.message : String(err), true);
    markCellError(`[${i + 1}][${j + 1}]`);
    return;
  }
  try {
    const saved = await api.putProblem(state.sessionId, updated);
    state.doc = await api.getProblem(state.sessionId);
    renderDoc();
    setStatus(`saved judgment (${i + 1}, ${j + 1}); document v${saved.version}`);
  } catch (err) {
    if (err instanceof ApiError) {
      setStatus(err.message, true);
      if (err.status === 409) {
        state.doc = await api.getProblem(state.sessionId);
        renderDoc();
      } else {
        markCellError(err.message);
      }
    }
  }
}

function solveOptions(): { mode: "most" | "least" | "all"; baseline: boolean } {
  const mode = el<HTMLSelectElement>("mode").value as "most" | "least" | "all";
  const baseline = el<HTMLInputElement>("baseline").checked;
  return { mode, baseline };
}

async function runSolve(): Promise<void> {
  if (!state.sessionId) return;
  clearCellErrors();
  try {
    setStatus("solving…");
    const report = await api.solve(state.sessionId, solveOptions());
    state.lastSavedReport = report;
    el<HTMLElement>("results").innerHTML = renderResults(report);
    setStatus("solved");
  } catch (err) {
    if (err instanceof ApiError) {
      setStatus(err.message, true);
      markCellError(err.message);
    }
  }
}

function readOverride(): JudgmentOverride | null {
  const matrixRaw = el<HTMLSelectElement>("override-matrix").value;
  const i = Number(el<HTMLInputElement>("override-i").value);
  const j = Number(el<HTMLInputElement>("override-j").value);
  const value = el<HTMLInputElement>("override-value").value.trim();
  if (!i || !j || !value) return null;
  return {
    matrix: matrixRaw === "criteria" ? "criteria" : Number(matrixRaw),
    i,
    j,
    value,
  };
}

async function runWhatif(): Promise<void> {
  if (!state.sessionId) return;
  const override = readOverride();
  if (!override) {
    setStatus("what-if needs matrix, row, column and value", true);
    return;
  }
  try {
    setStatus("solving what-if…");
    const report = await api.whatif(state.sessionId, [override], solveOptions());
    el<HTMLElement>("results").innerHTML = renderResults(report, {
      previousOrder: state.lastSavedReport?.combined_order,
    });
    setStatus("what-if result shown; session unchanged");
  } catch (err) {
    if (err instanceof ApiError) setStatus(err.message, true);
  }
}

function populateOverrideMatrixChoices(): void {
  if (!state.doc) return;
  const select = el<HTMLSelectElement>("override-matrix");
  const options = [`<option value="criteria">criteria</option>`];
  state.doc.criteria.forEach((label, k) => {
    options.push(`<option value="${k + 1}">${k + 1}: ${label}</option>`);
  });
  select.innerHTML = options.join("");
}

export function boot(): void {
  el<HTMLElement>("load-vacation").addEventListener("click", () =>
    loadExample("vacation").then(populateOverrideMatrixChoices),
  );
  el<HTMLElement>("load-school").addEventListener("click", () =>
    loadExample("school").then(populateOverrideMatrixChoices),
  );
  el<HTMLElement>("solve").addEventListener("click", runSolve);
  el<HTMLElement>("whatif").addEventListener("click", runWhatif);

  const grids = el<HTMLElement>("grids");
  grids.addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    if (!input.matches("input[data-target]")) return;
    const target =
      input.dataset.target === "criteria" ? "criteria" : Number(input.dataset.target);
    void saveEdit(target, Number(input.dataset.i), Number(input.dataset.j), input.value);
  });
  grids.addEventListener("click", (event) => {
    const button = event.target as HTMLElement;
    if (!button.matches("button.pick")) return;
    const focused = grids.querySelector<HTMLInputElement>("input:focus");
    if (focused) {
      focused.value = button.dataset.pick ?? "";
      focused.dispatchEvent(new Event("change", { bubbles: true }));
    }
  });

  void api
    .health()
    .then(() => setStatus("connected; load an example to begin"))
    .catch(() => setStatus("API unreachable; is the server running?", true));
}

if (typeof document !== "undefined" && document.getElementById("grids")) {
  boot();
}
