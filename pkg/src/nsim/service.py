"""Stateless HTTP facade over the engine.

Every request carries the full position (the position document is the same
JSON shape the CLI uses), so there is no session state. A process-wide
solve cache keyed by raw position masks is shared across requests behind a
lock; responses do not depend on request interleaving.
"""

from __future__ import annotations

import os
import threading
from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .board import (
    BoardError,
    DeadPositionError,
    EdgeOccupiedError,
    GameOverError,
    Position,
    apply_move,
    edge_endpoints,
    edge_index,
    player_to_move,
    position_from_doc,
    position_to_doc,
    status,
    status_to_doc,
)
from .presets import preset_grid
from .solver import BudgetExceededError, GameValue, SolveLimits, Solver

Value = Literal["GreenWins", "RedWins", "Draw"]


class PositionModel(BaseModel):
    n: int
    green: list[tuple[int, int]]
    red: list[tuple[int, int]]
    to_move: Optional[Literal["green", "red"]] = None


class BudgetModel(BaseModel):
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


class EvaluateRequest(BaseModel):
    position: PositionModel
    budget: Optional[BudgetModel] = None


class StatusModel(BaseModel):
    state: Literal["live", "finished", "draw"]
    loser: Optional[Literal["green", "red"]] = None


class MoveValueModel(BaseModel):
    edge: tuple[int, int]
    value: Value


class EvaluateResponse(BaseModel):
    value: Value
    to_move: Literal["green", "red"]
    status: StatusModel
    moves: list[MoveValueModel]


class MoveRequest(BaseModel):
    position: PositionModel
    edge: tuple[int, int]
    engine_replies: bool = False


class MoveResponse(BaseModel):
    position: PositionModel
    status: StatusModel
    engine_move: Optional[tuple[int, int]] = None


class PresetModel(BaseModel):
    name: str
    params: dict
    position: PositionModel


app = FastAPI(title="n-Sim engine", version="0.1.0")

_cache_lock = threading.Lock()
_memo_by_n: dict[int, dict[int, int]] = {}


@app.exception_handler(RequestValidationError)
async def _validation_to_400(request: Request, exc: RequestValidationError):
    return JSONResponse(status_code=400, content={"detail": exc.errors()})


def _http_error(code: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=code, content={"detail": message})


def _parse_position(doc: PositionModel, allow_finished: bool = False) -> Position:
    return position_from_doc(doc.model_dump(exclude_none=True), allow_finished=allow_finished)


def _limits(budget: Optional[BudgetModel]) -> SolveLimits:
    if budget is None:
        return SolveLimits()
    kwargs = {}
    if budget.max_nodes is not None:
        kwargs["max_nodes"] = budget.max_nodes
    if budget.max_seconds is not None:
        kwargs["max_seconds"] = budget.max_seconds
    return SolveLimits(**kwargs)


def _solver(n: int, limits: SolveLimits) -> Solver:
    memo = _memo_by_n.setdefault(n, {})
    return Solver(n, limits=limits, memo=memo)


@app.get("/presets", response_model=list[PresetModel])
def presets():
    return preset_grid()


@app.post("/evaluate", response_model=EvaluateResponse)
def evaluate(req: EvaluateRequest):
    try:
        p = _parse_position(req.position)
    except DeadPositionError as exc:
        return _http_error(422, str(exc))
    except BoardError as exc:
        return _http_error(400, str(exc))
    st = status(p)
    try:
        with _cache_lock:
            solver = _solver(p.n, _limits(req.budget))
            value = solver.solve(p)
            moves = solver.best_moves(p) if st.is_live else []
    except BudgetExceededError as exc:
        return _http_error(503, str(exc))
    return EvaluateResponse(
        value=value.value,
        to_move=player_to_move(p).value,
        status=StatusModel(**status_to_doc(st)),
        moves=[
            MoveValueModel(edge=edge_endpoints(e, p.n), value=v.value) for e, v in moves
        ],
    )


@app.post("/move", response_model=MoveResponse)
def move(req: MoveRequest):
    try:
        p = _parse_position(req.position, allow_finished=True)
    except BoardError as exc:
        return _http_error(400, str(exc))
    i, j = req.edge
    if not (0 <= i < p.n and 0 <= j < p.n) or i == j:
        return _http_error(400, f"({i}, {j}) is not an edge of K_{p.n}")
    e = edge_index(min(i, j), max(i, j), p.n)
    try:
        after = apply_move(p, e)
    except (GameOverError, EdgeOccupiedError) as exc:
        return _http_error(409, str(exc))

    engine_move = None
    st = status(after)
    if req.engine_replies and st.is_live:
        try:
            with _cache_lock:
                solver = _solver(p.n, SolveLimits())
                reply = solver.engine_reply(after)
        except BudgetExceededError as exc:
            return _http_error(503, str(exc))
        engine_move = edge_endpoints(reply, p.n)
        after = apply_move(after, reply)
        st = status(after)

    return MoveResponse(
        position=PositionModel(**position_to_doc(after)),
        status=StatusModel(**status_to_doc(st)),
        engine_move=engine_move,
    )


def _mount_ui() -> None:
    ui_dir = os.environ.get("NSIM_UI_DIR", os.path.join("frontend", "dist"))
    if os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")


_mount_ui()
