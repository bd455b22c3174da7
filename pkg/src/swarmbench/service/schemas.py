"""Pydantic request/response models for the service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class ProblemInfo(BaseModel):
    name: str
    dim: int
    n_constraints: int
    sense: Literal["min", "max"]
    lower: list[float]
    upper: list[float]
    known_best_value: Optional[float]
    optimum_location: str
    source: str


class OptimumCheck(BaseModel):
    name: str
    violation: float
    feasible: bool
    value: float
    value_error: float
    tolerance: float
    ok: bool


class VerifyResponse(BaseModel):
    all_ok: bool
    checks: list[OptimumCheck]


class CaseModel(BaseModel):
    problem: str
    engine: Literal["lps", "deps"]
    mode: Literal["boundary", "random", "periodic"]
    particles: int
    generations: int
    runs: int
    base_seed: int


class RunRequest(BaseModel):
    problem: str
    engine: Literal["lps", "deps"] = "lps"
    mode: Literal["boundary", "random", "periodic"] = "periodic"
    particles: int = Field(default=14, ge=2)
    generations: int = Field(default=2000, ge=0)
    runs: int = Field(default=30, ge=1)
    base_seed: int = 2004
    jobs: int = Field(default=1, ge=1)


class RunRecordModel(BaseModel):
    run_index: int
    seed: int
    best_value: float
    violation: float
    feasible: bool
    evaluations: int
    best_point: list[float]


class AggregateModel(BaseModel):
    mean_best: Optional[float]
    failure_rate: float
    n_succeeded: int
    runs: int


class RunResponse(BaseModel):
    case: CaseModel
    aggregate: AggregateModel
    runs: list[RunRecordModel]


class ReproduceRequest(BaseModel):
    table: Literal["t3", "t4", "t6"]
    runs: int = Field(default=30, ge=1)
    base_seed: int = 2004
    jobs: int = Field(default=1, ge=1)


class CellModel(BaseModel):
    problem: str
    label: str
    engine: str
    mode: str
    particles: int
    generations: int
    runs: int
    mean_best: Optional[float]
    failure_rate: float
    paper_mean: float
    paper_failure_rate: Optional[float]


class ReproduceResponse(BaseModel):
    table: str
    rows: list[CellModel]
    text: str
