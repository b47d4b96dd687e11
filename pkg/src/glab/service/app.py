"""HTTP surface over the core engines; every endpoint is a thin adapter.

Domain errors map to status codes: malformed input and budget trips are
422, a query a truncated or too-small ball cannot decide is 409, and a
missing ball file is 404.
"""

from __future__ import annotations

from dataclasses import fields as dataclass_fields
from fractions import Fraction
from typing import Callable, TypeVar

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..boundary import (
    ConeParams,
    UnresolvedConeError,
    antipodal_lower_bound,
    cone_contains,
    estimate_s,
    growth,
    t_min,
)
from ..cayley import TruncatedBallError, ball, distance, save_ball
from ..checks import CheckConfig, run_all
from ..groups import group_from_id
from ..shortcuts import build_wk, build_wk_prime, shortcut_g1inv_g2, shortcut_sk
from .models import (
    AntipodalRequest,
    BallRequest,
    BallResponse,
    ChecksRequest,
    ConeRequest,
    ConeResponse,
    DistanceRequest,
    DistanceResponse,
    EqualRequest,
    EqualResponse,
    EstimateRequest,
    EvalRequest,
    EvalResponse,
    GrowthRequest,
    GrowthResponse,
    TminRequest,
    TminResponse,
    WordRequest,
    WordResponse,
)
from .state import BallCache

T = TypeVar("T")

_WORD_BUILDERS = {
    "wk": build_wk,
    "wkprime": build_wk_prime,
    "sk": shortcut_sk,
    "g1g2": shortcut_g1inv_g2,
}


def _run(fn: Callable[[], T]) -> T:
    try:
        return fn()
    except (UnresolvedConeError, TruncatedBallError) as e:
        raise HTTPException(409, f"{type(e).__name__}: {e}") from None
    except FileNotFoundError as e:
        raise HTTPException(404, str(e)) from None
    except (ValueError, KeyError) as e:
        raise HTTPException(422, f"{type(e).__name__}: {e}") from None


def create_app() -> FastAPI:
    app = FastAPI(title="glab", version=__version__)
    cache = BallCache()

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse)
    def eval_word(req: EvalRequest) -> EvalResponse:
        def go() -> EvalResponse:
            G = group_from_id(req.group)
            g = G.evaluate_text(req.word)
            n = G.a_power(g)
            return EvalResponse(
                group=G.group_id,
                key=G.canonical_key(g),
                a_power=None if n is None else str(n),
            )

        return _run(go)

    @app.post("/equal", response_model=EqualResponse)
    def equal_words(req: EqualRequest) -> EqualResponse:
        def go() -> EqualResponse:
            G = group_from_id(req.group)
            lk = G.canonical_key(G.evaluate_text(req.left))
            rk = G.canonical_key(G.evaluate_text(req.right))
            return EqualResponse(equal=lk == rk, left_key=lk, right_key=rk)

        return _run(go)

    @app.post("/ball", response_model=BallResponse)
    def build_ball(req: BallRequest) -> BallResponse:
        def go() -> BallResponse:
            G = group_from_id(req.group)
            b = ball(G, req.radius, memory_cap=req.cap, workers=req.workers,
                     store_parents=False)
            saved = None
            if req.save_path:
                save_ball(b, req.save_path)
                saved = req.save_path
            return BallResponse(
                group=G.group_id,
                radius=b.radius,
                entries=len(b),
                complete=b.complete,
                sphere_sizes=b.sphere_sizes(),
                saved_to=saved,
            )

        return _run(go)

    @app.post("/distance", response_model=DistanceResponse)
    def ball_distance(req: DistanceRequest) -> DistanceResponse:
        def go() -> DistanceResponse:
            b = cache.load(req.ball_path)
            G = group_from_id(b.group_id)
            g = G.evaluate_text(req.word)
            res = distance(b, G, g)
            return DistanceResponse(
                key=G.canonical_key(g),
                distance=res.distance,
                radius=res.radius,
                display=str(res),
            )

        return _run(go)

    @app.post("/growth", response_model=GrowthResponse)
    def growth_table(req: GrowthRequest) -> GrowthResponse:
        def go() -> GrowthResponse:
            G = group_from_id(req.group)
            b = ball(G, req.radius, memory_cap=req.cap, workers=req.workers,
                     store_parents=False)
            table = growth(G, G.evaluate_text(req.element), b,
                           power_bound=req.power_bound,
                           digit_budget=req.digit_budget)
            return GrowthResponse(
                group=table.group_id,
                element_key=table.element_key,
                radius=table.radius,
                rows=list(table.rows),
                scan_complete=table.scan_complete,
                csv=table.to_csv(),
            )

        return _run(go)

    @app.post("/cone", response_model=ConeResponse)
    def cone(req: ConeRequest) -> ConeResponse:
        def go() -> ConeResponse:
            G = group_from_id(req.group)
            b = ball(G, req.radius, memory_cap=req.cap, workers=req.workers,
                     store_parents=False)
            params = ConeParams(Fraction(req.alpha_num, req.alpha_den), req.c)
            got = cone_contains(G, G.evaluate_text(req.element), params,
                                G.evaluate_text(req.target), b, req.n_range)
            return ConeResponse(contains=got)

        return _run(go)

    @app.post("/estimate-s")
    def estimate(req: EstimateRequest) -> dict:
        def go() -> dict:
            G = group_from_id(req.group)
            b = ball(G, req.radius, memory_cap=req.cap, workers=req.workers,
                     store_parents=False)
            est = estimate_s(G, G.evaluate_text(req.g), G.evaluate_text(req.h),
                             b, req.i_max, tuple(req.c_grid), req.j_limit)
            return est.to_json_dict()

        return _run(go)

    @app.post("/antipodal")
    def antipodal(req: AntipodalRequest) -> dict:
        def go() -> dict:
            G = group_from_id(req.group)
            b = ball(G, req.radius, memory_cap=req.cap, workers=req.workers,
                     store_parents=False)
            est = antipodal_lower_bound(G, G.evaluate_text(req.g), b,
                                        req.i_max, tuple(req.c_grid), req.j_limit)
            return est.to_json_dict()

        return _run(go)

    @app.post("/tmin", response_model=TminResponse)
    def tmin(req: TminRequest) -> TminResponse:
        return _run(lambda: TminResponse(t=t_min(req.d, req.gamma, req.delta)))

    @app.post("/words/{kind}", response_model=WordResponse)
    def make_word(kind: str, req: WordRequest) -> WordResponse:
        def go() -> WordResponse:
            builder = _WORD_BUILDERS.get(kind)
            if builder is None:
                choices = ", ".join(sorted(_WORD_BUILDERS))
                raise ValueError(f"unknown word family {kind!r} (choices: {choices})")
            w = builder(req.k)
            return WordResponse(kind=kind, k=req.k, text=w.text(), length=w.length())

        return _run(go)

    @app.post("/checks/run")
    def checks_run(req: ChecksRequest) -> dict:
        def go() -> dict:
            known = {f.name for f in dataclass_fields(CheckConfig)}
            unknown = sorted(set(req.config) - known)
            if unknown:
                raise ValueError(f"unknown config keys: {', '.join(unknown)}")
            return run_all(CheckConfig(**req.config)).to_json_dict()

        return _run(go)

    return app
