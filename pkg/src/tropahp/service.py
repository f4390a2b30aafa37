"""HTTP API over the solver with file-backed sessions.

One JSON file per session lives under the data directory; writes to a session
are serialized by a per-session lock and guarded against lost updates by a
document version counter (stale writes get 409).  Solving never mutates the
stored document, and what-if requests run entirely on a copy.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from fractions import Fraction
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException

from .ahp import solve
from .core import Tolerance, scalar_eq
from .documents import (
    SCHEMA_VERSION,
    DocumentError,
    ProblemDocument,
    parse_entry,
    report_geometry,
    report_to_document,
)

__all__ = ["create_app", "default_data_dir", "SessionStore"]


def default_data_dir() -> Path:
    return Path(os.environ.get("TROPAHP_DATA", "tropahp_data"))


class SessionStore:
    """One JSON file per session id, with per-session write locks."""

    def __init__(self, data_dir) -> None:
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        if not session_id.replace("-", "").replace("_", "").isalnum():
            raise KeyError(session_id)
        return self.data_dir / f"{session_id}.json"

    def create(self, document: dict) -> str:
        while True:
            session_id = secrets.token_urlsafe(8)
            path = self._path(session_id)
            if not path.exists():
                break
        self.write(session_id, document)
        return session_id

    def read(self, session_id: str) -> dict:
        try:
            path = self._path(session_id)
        except KeyError:
            raise KeyError(session_id) from None
        if not path.exists():
            raise KeyError(session_id)
        return json.loads(path.read_text(encoding="utf-8"))

    def write(self, session_id: str, document: dict) -> None:
        payload = {
            "id": session_id,
            "updated_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "document": document,
        }
        path = self._path(session_id)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, ensure_ascii=False, indent=2), encoding="utf-8")
        tmp.replace(path)


def _complete_reciprocal(rows, where: str, rel_eq: float):
    """Fill null cells from their mirror (a_ji = 1/a_ij) and force a unit diagonal.

    Cells already present on both sides must agree reciprocally within rel_eq.
    Rational-string sources get rational reciprocals so exactness is preserved.
    """
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError(f"{where}: expected a list of rows")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DocumentError(f"{where}: matrix must be square")
    out = [list(r) for r in rows]
    for i in range(n):
        if out[i][i] is None:
            out[i][i] = 1
        elif not scalar_eq(parse_entry(out[i][i], f"{where}[{i + 1}][{i + 1}]"), 1.0, rel_eq):
            raise DocumentError(f"{where}: diagonal entry ({i + 1}, {i + 1}) must be 1")
    for i in range(n):
        for j in range(i + 1, n):
            upper, lower = out[i][j], out[j][i]
            if upper is None and lower is None:
                raise DocumentError(f"{where}: entries ({i + 1}, {j + 1}) and "
                                    f"({j + 1}, {i + 1}) are both missing")
            if upper is None:
                out[i][j] = _reciprocal_entry(lower, f"{where}[{j + 1}][{i + 1}]")
            elif lower is None:
                out[j][i] = _reciprocal_entry(upper, f"{where}[{i + 1}][{j + 1}]")
            else:
                u = parse_entry(upper, f"{where}[{i + 1}][{j + 1}]")
                l = parse_entry(lower, f"{where}[{j + 1}][{i + 1}]")
                if not scalar_eq(u * l, 1.0, rel_eq):
                    raise DocumentError(
                        f"{where}: entries ({i + 1}, {j + 1}) and ({j + 1}, {i + 1}) "
                        f"are not reciprocal"
                    )
    return out


def _reciprocal_entry(value, where: str):
    parsed = parse_entry(value, where)
    if isinstance(value, str):
        return str(1 / Fraction(value.strip()))
    if float(parsed).is_integer() and parsed != 0:
        return f"1/{int(parsed)}" if parsed != 1 else 1
    return 1.0 / parsed


def _completed_document(data: dict, rel_eq: float) -> ProblemDocument:
    if not isinstance(data, dict):
        raise DocumentError("problem document must be a JSON object")
    data = dict(data)
    if "criteria_matrix" in data:
        data["criteria_matrix"] = _complete_reciprocal(
            data["criteria_matrix"], "criteria_matrix", rel_eq
        )
    if "alternative_matrices" in data:
        data["alternative_matrices"] = [
            _complete_reciprocal(m, f"alternative_matrices[{k + 1}]", rel_eq)
            for k, m in enumerate(data["alternative_matrices"])
        ]
    return ProblemDocument.from_json_dict(data, rel_eq)


def _tolerances(body: dict) -> Tolerance:
    try:
        return Tolerance(
            rel_eq=float(body.get("rel_eq", Tolerance().rel_eq)),
            tie_tol=float(body.get("tie_tol", Tolerance().tie_tol)),
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _apply_overrides(doc: ProblemDocument, overrides, rel_eq: float) -> ProblemDocument:
    data = doc.to_json_dict()
    for idx, override in enumerate(overrides):
        where = f"overrides[{idx + 1}]"
        if not isinstance(override, dict):
            raise DocumentError(f"{where}: expected an object")
        target = override.get("matrix", "criteria")
        try:
            i = int(override["i"]) - 1
            j = int(override["j"]) - 1
            value = override["value"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"{where}: needs integer i, j and a value") from exc
        parse_entry(value, f"{where}.value")
        if target == "criteria":
            rows = data["criteria_matrix"]
        else:
            k = int(target) - 1
            if not 0 <= k < len(data["alternative_matrices"]):
                raise DocumentError(f"{where}: no alternative matrix {target}")
            rows = data["alternative_matrices"][k]
        if not (0 <= i < len(rows) and 0 <= j < len(rows)):
            raise DocumentError(f"{where}: position ({i + 1}, {j + 1}) out of range")
        if i == j:
            raise DocumentError(f"{where}: the diagonal is fixed at 1")
        rows[i][j] = value
        rows[j][i] = _reciprocal_entry(value, f"{where}.value")
    return ProblemDocument.from_json_dict(data, rel_eq)


def create_app(data_dir=None, ui_dir=None) -> FastAPI:
    store = SessionStore(data_dir or default_data_dir())
    app = FastAPI(title="tropahp", version="0.1.0")
    ui_dir = ui_dir or os.environ.get("TROPAHP_UI")

    def _get_document(session_id: str) -> ProblemDocument:
        try:
            payload = store.read(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return ProblemDocument.from_json_dict(payload["document"])

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "schema_version": SCHEMA_VERSION}

    @app.post("/api/problems", status_code=201)
    def create_problem(body: dict = Body(...)) -> dict:
        try:
            doc = _completed_document(body, Tolerance().rel_eq)
        except DocumentError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        doc.version = 1
        session_id = store.create(doc.to_json_dict())
        return {"id": session_id, "version": doc.version}

    @app.get("/api/problems/{session_id}")
    def get_problem(session_id: str) -> dict:
        try:
            payload = store.read(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return payload["document"]

    @app.put("/api/problems/{session_id}")
    def put_problem(session_id: str, body: dict = Body(...)) -> dict:
        with store.lock(session_id):
            try:
                current = store.read(session_id)
            except KeyError:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
            current_version = int(current["document"].get("version", 1))
            sent_version = body.get("version")
            if sent_version is not None and int(sent_version) != current_version:
                raise HTTPException(
                    status_code=409,
                    detail=f"version conflict: stored {current_version}, sent {sent_version}",
                )
            try:
                doc = _completed_document(body, Tolerance().rel_eq)
            except DocumentError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            doc.version = current_version + 1
            store.write(session_id, doc.to_json_dict())
            return {"id": session_id, "version": doc.version}

    @app.post("/api/problems/{session_id}/solve")
    def solve_problem(session_id: str, body: dict = Body(default={})) -> dict:
        doc = _get_document(session_id)
        tol = _tolerances(body)
        mode = body.get("mode", "all")
        if mode not in ("most", "least", "all"):
            raise HTTPException(status_code=400, detail=f"unknown mode {mode!r}")
        try:
            report = solve(doc.to_problem(tol.rel_eq), tol,
                           baseline=bool(body.get("baseline", False)))
        except (DocumentError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return report_to_document(report, mode, name=doc.name)

    @app.post("/api/problems/{session_id}/whatif")
    def whatif(session_id: str, body: dict = Body(default={})) -> dict:
        doc = _get_document(session_id)
        tol = _tolerances(body)
        mode = body.get("mode", "all")
        if mode not in ("most", "least", "all"):
            raise HTTPException(status_code=400, detail=f"unknown mode {mode!r}")
        try:
            modified = _apply_overrides(doc, body.get("overrides", []), tol.rel_eq)
            weights = body.get("weights")
            report = solve(modified.to_problem(tol.rel_eq), tol,
                           baseline=bool(body.get("baseline", False)),
                           weights=weights)
        except (DocumentError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        out = report_to_document(report, mode, name=doc.name)
        out["whatif"] = True
        return out

    @app.get("/api/problems/{session_id}/geometry")
    def geometry(session_id: str) -> dict:
        doc = _get_document(session_id)
        try:
            problem = doc.to_problem()
            if problem.n_alternatives != 3:
                raise ValueError(
                    f"geometry needs exactly 3 alternatives, got {problem.n_alternatives}"
                )
            report = solve(problem)
            return report_geometry(report)
        except (DocumentError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
