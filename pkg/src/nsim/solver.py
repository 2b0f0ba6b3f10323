"""Exact game-theoretic evaluation of n-Sim positions.

Memoized exhaustive search over raw (green-mask, red-mask) states with a
three-valued scheme: mover win / draw / mover loss. A move that completes
the mover's own triangle loses immediately and is never expanded; search
stops at a node as soon as one mover-winning child is proven. Values are
exact. Canonical-key memoization (boards up to 7 vertices) is available as
an opt-in: it only pays off on highly symmetric roots.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from . import symmetry
from .board import (
    Color,
    GameOverError,
    GameState,
    Position,
    edge_pair_masks,
    num_edges,
    player_to_move,
    status,
)

DEFAULT_MAX_NODES = 10**9
DEFAULT_MAX_SECONDS = 1800.0

_TIME_CHECK_INTERVAL = 4096


class GameValue(Enum):
    GREEN_WINS = "GreenWins"
    RED_WINS = "RedWins"
    DRAW = "Draw"


def winner_value(c: Color) -> GameValue:
    return GameValue.GREEN_WINS if c is Color.GREEN else GameValue.RED_WINS


@dataclass(frozen=True)
class SolveLimits:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class SolveStats:
    nodes: int = 0
    table_entries: int = 0
    elapsed: float = 0.0
    budget_hit: bool = False

    def to_doc(self) -> dict:
        return {
            "nodes": self.nodes,
            "table_entries": self.table_entries,
            "elapsed_seconds": self.elapsed,
            "budget_hit": self.budget_hit,
        }


class BudgetExceededError(RuntimeError):
    """Node or time budget hit; partial stats are attached, no value."""

    def __init__(self, stats: SolveStats):
        super().__init__(
            f"solve budget exceeded after {stats.nodes} nodes / {stats.elapsed:.1f}s"
        )
        self.stats = stats


@dataclass(frozen=True)
class SolveResult:
    value: GameValue
    stats: SolveStats


class _Budget(Exception):
    pass


class Solver:
    """Reusable solver for one board size; the memo table persists across calls."""

    def __init__(
        self,
        n: int,
        limits: SolveLimits | None = None,
        canonical_memo: bool = False,
        memo: dict[int, int] | None = None,
    ):
        if canonical_memo and n > symmetry.CANONICAL_MAX_BOARD:
            raise ValueError(
                f"canonical memoization requires n <= {symmetry.CANONICAL_MAX_BOARD}"
            )
        self.n = n
        self.limits = limits or SolveLimits()
        self.canonical_memo = canonical_memo
        self._num_edges = num_edges(n)
        self._full = (1 << self._num_edges) - 1
        self._pair_masks = edge_pair_masks(n)
        self._memo: dict[int, int] = {} if memo is None else memo
        self.stats = SolveStats()
        self._deadline = 0.0

    # -- public API ---------------------------------------------------------

    def solve(self, p: Position) -> GameValue:
        """Exact value of p under perfect play."""
        self._require_board(p)
        st = status(p)
        if st.state is GameState.FINISHED:
            raise GameOverError("position is finished; nothing to solve")
        if st.state is GameState.DRAW:
            return GameValue.DRAW
        mover = player_to_move(p)
        rel = self._run(p.green, p.red, mover is Color.GREEN)
        return self._absolute(rel, mover)

    def best_moves(self, p: Position) -> list[tuple[int, GameValue]]:
        """Every uncolored edge paired with the exact value of the position
        after the mover plays it, sorted by edge id."""
        self._require_board(p)
        if not status(p).is_live:
            raise GameOverError("position is not live")
        mover = player_to_move(p)
        mover_green = mover is Color.GREEN
        mover_mask = p.green if mover_green else p.red
        out = []
        self._start_clock()
        try:
            for e in p.uncolored_edges():
                bit = 1 << e
                if self._completes(e, mover_mask):
                    out.append((e, winner_value(mover.opposite)))
                    continue
                if (p.occupied | bit) == self._full:
                    out.append((e, GameValue.DRAW))
                    continue
                if mover_green:
                    rel = self._negamax(p.green | bit, p.red, False)
                else:
                    rel = self._negamax(p.green, p.red | bit, True)
                out.append((e, self._absolute(-rel, mover)))
        except _Budget:
            self._finish_clock()
            raise BudgetExceededError(self.stats)
        self._finish_clock()
        return out

    def engine_reply(self, p: Position) -> int:
        """Lowest-edge-id move achieving the mover-optimal value."""
        moves = self.best_moves(p)
        mover = player_to_move(p)
        rank = {winner_value(mover): 2, GameValue.DRAW: 1, winner_value(mover.opposite): 0}
        best = max(rank[v] for _, v in moves)
        for e, v in moves:
            if rank[v] == best:
                return e
        raise AssertionError("live position has no moves")

    # -- internals ------------------------------------------------------------

    def _require_board(self, p: Position) -> None:
        if p.n != self.n:
            raise ValueError(f"solver is for n={self.n}, position has n={p.n}")

    def _absolute(self, rel: int, mover: Color) -> GameValue:
        if rel == 0:
            return GameValue.DRAW
        return winner_value(mover if rel > 0 else mover.opposite)

    def _completes(self, e: int, color_mask: int) -> bool:
        for pm in self._pair_masks[e]:
            if pm & color_mask == pm:
                return True
        return False

    def _start_clock(self) -> None:
        self._t0 = time.monotonic()
        self._deadline = self._t0 + self.limits.max_seconds
        self.stats.budget_hit = False

    def _finish_clock(self) -> None:
        self.stats.elapsed += time.monotonic() - self._t0
        self.stats.table_entries = len(self._memo)

    def _run(self, green: int, red: int, green_to_move: bool) -> int:
        self._start_clock()
        try:
            rel = self._negamax(green, red, green_to_move)
        except _Budget:
            self._finish_clock()
            raise BudgetExceededError(self.stats)
        self._finish_clock()
        return rel

    def _key(self, green: int, red: int) -> int:
        if self.canonical_memo:
            green, red = symmetry._min_relabeling(self.n, green, red)
        return (green << self._num_edges) | red

    def _negamax(self, green: int, red: int, green_to_move: bool) -> int:
        stats = self.stats
        stats.nodes += 1
        if stats.nodes > self.limits.max_nodes:
            stats.budget_hit = True
            raise _Budget
        if stats.nodes % _TIME_CHECK_INTERVAL == 0 and time.monotonic() > self._deadline:
            stats.budget_hit = True
            raise _Budget

        key = self._key(green, red)
        cached = self._memo.get(key)
        if cached is not None:
            return cached

        pair_masks = self._pair_masks
        open_mask = self._full & ~(green | red)
        mover_mask = green if green_to_move else red
        best = -2
        m = open_mask
        while m:
            bit = m & -m
            m ^= bit
            e = bit.bit_length() - 1
            loses = False
            for pm in pair_masks[e]:
                if pm & mover_mask == pm:
                    loses = True
                    break
            if loses:
                # completing the mover's own triangle: known loss, never expanded
                if best < -1:
                    best = -1
                continue
            child_open = open_mask ^ bit
            if child_open == 0:
                if best < 0:
                    best = 0
                continue
            if green_to_move:
                v = -self._negamax(green | bit, red, False)
            else:
                v = -self._negamax(green, red | bit, True)
            if v > best:
                best = v
                if best == 1:
                    break
        self._memo[key] = best
        return best


def solve(
    p: Position,
    limits: SolveLimits | None = None,
    canonical_memo: bool = False,
) -> SolveResult:
    s = Solver(p.n, limits=limits, canonical_memo=canonical_memo)
    value = s.solve(p)
    return SolveResult(value, s.stats)


def best_moves(
    p: Position,
    limits: SolveLimits | None = None,
    canonical_memo: bool = False,
) -> list[tuple[int, GameValue]]:
    return Solver(p.n, limits=limits, canonical_memo=canonical_memo).best_moves(p)


def engine_reply(p: Position, limits: SolveLimits | None = None) -> int:
    return Solver(p.n, limits=limits).engine_reply(p)
