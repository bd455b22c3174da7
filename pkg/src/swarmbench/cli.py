"""Command-line client for the experiment service.

Every subcommand talks HTTP to the service layer.  By default the requests
are dispatched in-process against the bundled ASGI app, so no server has to
be running; pass ``--server http://host:port`` to target a remote instance
started with ``swarmbench serve``.

Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 self-check
failure.
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Optional

import click
import httpx

from .boundary import BoundaryMode
from .harness import CaseSpec, RunRecord, RunStats, render_csv, render_json, render_summary

EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_SELFCHECK = 3


class ServiceClient:
    """Minimal HTTP client; in-process ASGI transport unless a server is given."""

    def __init__(self, server: Optional[str] = None):
        self.server = server

    def request(self, method: str, path: str, payload: Optional[dict] = None) -> httpx.Response:
        try:
            return asyncio.run(self._request(method, path, payload))
        except httpx.TransportError as exc:
            click.echo(f"error: cannot reach service: {exc}", err=True)
            sys.exit(EXIT_IO)

    async def _request(self, method: str, path: str, payload: Optional[dict]) -> httpx.Response:
        if self.server is None:
            from .service.app import app

            transport = httpx.ASGITransport(app=app)
            base_url = "http://swarmbench.local"
        else:
            transport = None
            base_url = self.server
        async with httpx.AsyncClient(
            transport=transport, base_url=base_url, timeout=None
        ) as client:
            return await client.request(method, path, json=payload)


def _checked(response: httpx.Response) -> dict:
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(EXIT_CONFIG)
    return response.json()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        click.echo(text, nl=False)
        return
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {path}: {exc}", err=True)
        sys.exit(EXIT_IO)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Remote service URL; default runs the service in-process.")
@click.pass_context
def main(ctx, server):
    """Constrained particle swarm benchmark client."""
    ctx.obj = ServiceClient(server)


@main.command("list-problems")
@click.pass_obj
def list_problems(client: ServiceClient):
    """Print the benchmark registry."""
    problems = _checked(client.request("GET", "/problems"))
    header = f"{'name':8s} {'D':>3s} {'m':>3s} {'sense':5s} {'best known':>14s} {'optimum':14s} source"
    click.echo(header)
    for p in problems:
        best = f"{p['known_best_value']:.6g}" if p["known_best_value"] is not None else "-"
        click.echo(
            f"{p['name']:8s} {p['dim']:3d} {p['n_constraints']:3d} {p['sense']:5s} "
            f"{best:>14s} {p['optimum_location']:14s} {p['source']}"
        )


@main.command("verify-optima")
@click.pass_obj
def verify_optima_cmd(client: ServiceClient):
    """Re-evaluate every stored best-known point; nonzero exit on failure."""
    report = _checked(client.request("POST", "/verify-optima"))
    for c in report["checks"]:
        status = "ok " if c["ok"] else "FAIL"
        click.echo(
            f"{status} {c['name']:8s} violation={c['violation']:.3e} "
            f"value={c['value']:.8g} error={c['value_error']:.3e} (tol {c['tolerance']:.3e})"
        )
    if not report["all_ok"]:
        click.echo("self-check failed", err=True)
        sys.exit(EXIT_SELFCHECK)
    click.echo("all optima verified")


def _stats_from_response(body: dict) -> RunStats:
    case = body["case"]
    spec = CaseSpec(
        problem=case["problem"],
        engine=case["engine"],
        mode=BoundaryMode.parse(case["mode"]),
        particles=case["particles"],
        generations=case["generations"],
        runs=case["runs"],
        base_seed=case["base_seed"],
    )
    records = tuple(
        RunRecord(
            run_index=r["run_index"],
            seed=r["seed"],
            best_value=r["best_value"],
            violation=r["violation"],
            feasible=r["feasible"],
            evaluations=r["evaluations"],
            best_point=tuple(r["best_point"]),
        )
        for r in body["runs"]
    )
    return RunStats(case=spec, per_run=records)


@main.command("run")
@click.option("--problem", required=True)
@click.option("--engine", type=click.Choice(["lps", "deps"]), default="lps", show_default=True)
@click.option("--mode", type=click.Choice(["boundary", "random", "periodic"]),
              default="periodic", show_default=True)
@click.option("--particles", type=int, default=14, show_default=True)
@click.option("--generations", type=int, default=2000, show_default=True)
@click.option("--runs", type=int, default=30, show_default=True)
@click.option("--seed", type=int, default=2004, show_default=True)
@click.option("--out", default=None, metavar="PATH", help="Write rows here instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--summary", "summary_path", default=None, metavar="PATH",
              help="Write the aggregate block here instead of printing it.")
@click.pass_obj
def run_cmd(client, problem, engine, mode, particles, generations, runs, seed,
            out, fmt, jobs, summary_path):
    """Execute one multi-run case and emit per-run results."""
    payload = {
        "problem": problem, "engine": engine, "mode": mode,
        "particles": particles, "generations": generations,
        "runs": runs, "base_seed": seed, "jobs": jobs,
    }
    body = _checked(client.request("POST", "/runs", payload))
    stats = _stats_from_response(body)
    rows = render_csv(stats) if fmt == "csv" else render_json(stats)
    _write_text(out, rows)
    summary = render_summary(stats)
    if summary_path is not None:
        _write_text(summary_path, summary)
    elif out is not None:
        click.echo(summary, nl=False)
    else:
        click.echo(summary, nl=False, err=True)


@main.command("reproduce")
@click.option("--table", type=click.Choice(["t3", "t4", "t6"]), required=True)
@click.option("--runs", type=int, default=30, show_default=True,
              help="Runs per cell (published tables used 100 or 500).")
@click.option("--seed", type=int, default=2004, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--out", default=None, metavar="PATH", help="Also save cell rows as JSON.")
@click.pass_obj
def reproduce_cmd(client, table, runs, seed, jobs, out):
    """Re-run a published comparison table and print obtained vs reference."""
    payload = {"table": table, "runs": runs, "base_seed": seed, "jobs": jobs}
    body = _checked(client.request("POST", "/reproduce", payload))
    click.echo(body["text"], nl=False)
    if out is not None:
        _write_text(out, json.dumps(body["rows"], indent=2) + "\n")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host, port):
    """Start the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
