"""Command line interface: solve, spectral, kleene, geometry, serve.

Exit codes: 0 on success, 1 on validation or input errors, 2 on usage errors
(click's default).
"""

from __future__ import annotations

import json
import sys

import click

from .ahp import solve
from .core import Tolerance, kleene_star, spectral_radius
from .documents import (
    DocumentError,
    emit_report,
    load_matrix,
    load_problem_document,
    render_report_text,
    report_geometry,
    report_to_document,
)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _tolerance(rel_eq: float, tie_tol: float) -> Tolerance:
    try:
        return Tolerance(rel_eq=rel_eq, tie_tol=tie_tol)
    except ValueError as exc:
        _fail(str(exc))


@click.group()
def main() -> None:
    """Tropical pairwise-comparison decision engine."""


@main.command("solve")
@click.argument("problem_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["most", "least", "all"]), default="all",
              show_default=True, help="Which differentiating branch to report.")
@click.option("--baseline", is_flag=True, help="Include the classic eigenvector baseline.")
@click.option("--tie-tol", type=float, default=Tolerance().tie_tol, show_default=True)
@click.option("--rel-eq", type=float, default=Tolerance().rel_eq, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the report to a file instead of stdout.")
def solve_command(problem_path, mode, baseline, tie_tol, rel_eq, fmt, out) -> None:
    """Solve a comparison problem file and report rankings."""
    tol = _tolerance(rel_eq, tie_tol)
    try:
        doc = load_problem_document(problem_path)
        report = solve(doc.to_problem(tol.rel_eq), tol, baseline=baseline)
    except (DocumentError, ValueError) as exc:
        _fail(str(exc))
    if fmt == "text":
        text = render_report_text(report, mode)
    else:
        text = emit_report(report_to_document(report, mode, name=doc.name))
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


@main.command("spectral")
@click.argument("matrix_path", type=click.Path(exists=True, dir_okay=False))
def spectral_command(matrix_path) -> None:
    """Print the tropical spectral radius of a matrix file."""
    try:
        value = spectral_radius(load_matrix(matrix_path))
    except (DocumentError, ValueError) as exc:
        _fail(str(exc))
    click.echo(f"{value:.12g}")


@main.command("kleene")
@click.argument("matrix_path", type=click.Path(exists=True, dir_okay=False))
def kleene_command(matrix_path) -> None:
    """Print the Kleene star of a matrix file as JSON."""
    try:
        star = kleene_star(load_matrix(matrix_path))
    except (DocumentError, ValueError) as exc:
        _fail(str(exc))
    rows = [[float(f"{v:.12g}") for v in row] for row in star]
    click.echo(json.dumps({"kleene_star": rows}, indent=2))


@main.command("geometry")
@click.argument("problem_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--tie-tol", type=float, default=Tolerance().tie_tol, show_default=True)
@click.option("--rel-eq", type=float, default=Tolerance().rel_eq, show_default=True)
def geometry_command(problem_path, tie_tol, rel_eq) -> None:
    """Emit x3 = 1 section plots for a 3-alternative problem."""
    tol = _tolerance(rel_eq, tie_tol)
    try:
        problem = load_problem_document(problem_path).to_problem(tol.rel_eq)
        if problem.n_alternatives != 3:
            raise ValueError(
                f"geometry needs exactly 3 alternatives, got {problem.n_alternatives}"
            )
        report = solve(problem, tol)
        sections = report_geometry(report)
    except (DocumentError, ValueError) as exc:
        _fail(str(exc))
    click.echo(json.dumps(sections, ensure_ascii=False, indent=2, sort_keys=True))


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data", "data_dir", type=click.Path(file_okay=False), default=None,
              help="Session directory (defaults to $TROPAHP_DATA or ./tropahp_data).")
@click.option("--ui", "ui_dir", type=click.Path(file_okay=False), default=None,
              help="Also serve a built frontend from this directory "
                   "(defaults to $TROPAHP_UI).")
def serve_command(port, host, data_dir, ui_dir) -> None:
    """Run the HTTP API, optionally serving the browser UI."""
    import uvicorn

    from .service import create_app, default_data_dir

    app = create_app(data_dir or default_data_dir(), ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
