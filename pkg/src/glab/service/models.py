"""Request/response schemas for the HTTP surface.

Exact values that can outgrow JSON number ranges (a-powers, rational
bounds) travel as decimal strings; everything else is plain JSON.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..arith import DEFAULT_DIGIT_BUDGET
from ..cayley import DEFAULT_MEMORY_CAP


class EvalRequest(BaseModel):
    group: str
    word: str


class EvalResponse(BaseModel):
    group: str
    key: str
    a_power: str | None


class EqualRequest(BaseModel):
    group: str
    left: str
    right: str


class EqualResponse(BaseModel):
    equal: bool
    left_key: str
    right_key: str


class BallRequest(BaseModel):
    group: str
    radius: int = Field(ge=0)
    cap: int = Field(default=DEFAULT_MEMORY_CAP, ge=1)
    workers: int = Field(default=1, ge=1)
    save_path: str | None = None


class BallResponse(BaseModel):
    group: str
    radius: int
    entries: int
    complete: bool
    sphere_sizes: list[int]
    saved_to: str | None


class DistanceRequest(BaseModel):
    ball_path: str
    word: str


class DistanceResponse(BaseModel):
    key: str
    distance: int | None
    radius: int
    display: str


class GrowthRequest(BaseModel):
    group: str
    element: str
    radius: int = Field(ge=0)
    power_bound: int | None = Field(default=None, ge=1)
    digit_budget: int = Field(default=DEFAULT_DIGIT_BUDGET, ge=1)
    cap: int = Field(default=DEFAULT_MEMORY_CAP, ge=1)
    workers: int = Field(default=1, ge=1)


class GrowthResponse(BaseModel):
    group: str
    element_key: str
    radius: int
    rows: list[tuple[int, int]]
    scan_complete: bool
    csv: str


class ConeRequest(BaseModel):
    group: str
    element: str
    target: str
    alpha_num: int = Field(ge=0)
    alpha_den: int = Field(default=1, ge=1)
    c: int = Field(ge=0)
    n_range: int = Field(ge=1)
    radius: int = Field(ge=0)
    cap: int = Field(default=DEFAULT_MEMORY_CAP, ge=1)
    workers: int = Field(default=1, ge=1)


class ConeResponse(BaseModel):
    contains: bool


class EstimateRequest(BaseModel):
    group: str
    g: str
    h: str
    radius: int = Field(ge=0)
    i_max: int = Field(ge=0)
    c_grid: list[int]
    j_limit: int | None = Field(default=None, ge=1)
    cap: int = Field(default=DEFAULT_MEMORY_CAP, ge=1)
    workers: int = Field(default=1, ge=1)


class AntipodalRequest(BaseModel):
    group: str
    g: str
    radius: int = Field(ge=0)
    i_max: int = Field(ge=0)
    c_grid: list[int]
    j_limit: int | None = Field(default=None, ge=1)
    cap: int = Field(default=DEFAULT_MEMORY_CAP, ge=1)
    workers: int = Field(default=1, ge=1)


class TminRequest(BaseModel):
    d: int
    gamma: float
    delta: float


class TminResponse(BaseModel):
    t: float


class WordRequest(BaseModel):
    k: int


class WordResponse(BaseModel):
    kind: str
    k: int
    text: str
    length: int


class ChecksRequest(BaseModel):
    """Overrides applied on top of the default check configuration;
    unknown keys are rejected."""

    config: dict = Field(default_factory=dict)
