"""FastAPI application wrapping the registry and the experiment harness."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from .. import __version__
from ..benchmarks import REGISTRY, get_problem, verify_optima
from ..errors import InvalidConfigError, InvalidInputError, UnknownProblemError
from ..harness import CaseSpec, reproduce_table, run_case, stats_as_dict
from .schemas import (
    OptimumCheck,
    ProblemInfo,
    ReproduceRequest,
    ReproduceResponse,
    RunRequest,
    RunResponse,
    VerifyResponse,
)

app = FastAPI(
    title="swarmbench",
    version=__version__,
    description=(
        "Constrained particle swarm optimization service: benchmark registry, "
        "seeded experiment cases, and published-table reproduction."
    ),
)


@app.exception_handler(InvalidConfigError)
@app.exception_handler(InvalidInputError)
async def _bad_request(request, exc):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _info(name: str) -> ProblemInfo:
    entry = REGISTRY[name]
    p = entry.problem
    return ProblemInfo(
        name=p.name,
        dim=p.dim,
        n_constraints=p.n_constraints,
        sense=p.sense.value,
        lower=[float(v) for v in p.bounds.lower],
        upper=[float(v) for v in p.bounds.upper],
        known_best_value=p.known_best_value,
        optimum_location=entry.optimum_location_class.value,
        source=entry.source,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/problems", response_model=list[ProblemInfo])
def list_problems() -> list[ProblemInfo]:
    return [_info(name) for name in REGISTRY]


@app.get("/problems/{name}", response_model=ProblemInfo)
def problem_detail(name: str) -> ProblemInfo:
    try:
        entry = get_problem(name)
    except UnknownProblemError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from None
    return _info(entry.problem.name)


@app.post("/verify-optima", response_model=VerifyResponse)
def verify() -> VerifyResponse:
    checks = [
        OptimumCheck(
            name=r.name,
            violation=r.violation,
            feasible=r.feasible,
            value=r.value,
            value_error=r.value_error,
            tolerance=r.tolerance,
            ok=r.ok,
        )
        for r in verify_optima()
    ]
    return VerifyResponse(all_ok=all(c.ok for c in checks), checks=checks)


@app.post("/runs", response_model=RunResponse)
def execute_case(request: RunRequest) -> RunResponse:
    try:
        spec = CaseSpec(
            problem=request.problem,
            engine=request.engine,
            mode=request.mode,
            particles=request.particles,
            generations=request.generations,
            runs=request.runs,
            base_seed=request.base_seed,
        )
        stats = run_case(spec, jobs=request.jobs)
    except UnknownProblemError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from None
    return RunResponse(**stats_as_dict(stats))


@app.post("/reproduce", response_model=ReproduceResponse)
def reproduce(request: ReproduceRequest) -> ReproduceResponse:
    report = reproduce_table(
        request.table, runs=request.runs, base_seed=request.base_seed, jobs=request.jobs
    )
    return ReproduceResponse(
        table=report.table,
        rows=[
            {
                "problem": r.problem,
                "label": r.label,
                "engine": r.engine,
                "mode": r.mode.value,
                "particles": r.particles,
                "generations": r.generations,
                "runs": r.runs,
                "mean_best": r.mean_best,
                "failure_rate": r.failure_rate,
                "paper_mean": r.paper_mean,
                "paper_failure_rate": r.paper_failure_rate,
            }
            for r in report.rows
        ],
        text=report.render_text(),
    )
