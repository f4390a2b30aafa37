// Thin client over the JSON HTTP API. Every number shown in the UI comes
// back from these calls; nothing is recomputed client-side.

import {
  GeometryReport,
  JudgmentOverride,
  ProblemDocument,
  ReportDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

export interface SolveOptions {
  mode?: "most" | "least" | "all";
  baseline?: boolean;
  rel_eq?: number;
  tie_tol?: number;
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetcher: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetcher(`${this.base}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    const data = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const detail = data && typeof data.detail === "string"
        ? data.detail
        : `${response.status} ${response.statusText}`;
      throw new ApiError(response.status, detail);
    }
    return data as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/api/health");
  }

  createProblem(doc: ProblemDocument): Promise<{ id: string; version: number }> {
    return this.request("POST", "/api/problems", doc);
  }

  getProblem(id: string): Promise<ProblemDocument> {
    return this.request("GET", `/api/problems/${id}`);
  }

  putProblem(id: string, doc: ProblemDocument): Promise<{ id: string; version: number }> {
    return this.request("PUT", `/api/problems/${id}`, doc);
  }

  solve(id: string, options: SolveOptions = {}): Promise<ReportDocument> {
    return this.request("POST", `/api/problems/${id}/solve`, options);
  }

  whatif(
    id: string,
    overrides: JudgmentOverride[],
    options: SolveOptions & { weights?: number[] } = {},
  ): Promise<ReportDocument> {
    return this.request("POST", `/api/problems/${id}/whatif`, {
      ...options,
      overrides,
    });
  }

  geometry(id: string): Promise<GeometryReport> {
    return this.request("GET", `/api/problems/${id}/geometry`);
  }
}
