"""Independent reference solver, kept deliberately plain.

Positions are frozensets of vertex pairs, triangles come straight from
itertools.combinations, and the recursion is unmemoized, unordered, and
unsymmetrized full minimax over absolute outcomes. It shares no search
machinery with the optimized solver: no bitmasks, no transposition table,
no cutoffs. Used only to cross-check solver results.
"""

from __future__ import annotations

import itertools

from .board import Position
from .solver import GameValue

_GREEN_WINS = 1
_DRAW = 0
_RED_WINS = -1

_VALUE_NAMES = {_GREEN_WINS: GameValue.GREEN_WINS, _DRAW: GameValue.DRAW, _RED_WINS: GameValue.RED_WINS}

EdgeSet = frozenset  # of (i, j) pairs with i < j


def _makes_own_triangle(n: int, edges: frozenset, new_edge: tuple[int, int]) -> bool:
    i, j = new_edge
    for k in range(n):
        if k == i or k == j:
            continue
        a = (min(i, k), max(i, k))
        b = (min(j, k), max(j, k))
        if a in edges and b in edges:
            return True
    return False


def _minimax(n: int, all_edges: list, green: frozenset, red: frozenset, log: dict | None) -> int:
    green_to_move = len(green) == len(red)
    best = None
    for e in all_edges:
        if e in green or e in red:
            continue
        if green_to_move:
            new_green = green | {e}
            if _makes_own_triangle(n, new_green, e):
                child = _RED_WINS
            elif len(new_green) + len(red) == len(all_edges):
                child = _DRAW
            else:
                child = _minimax(n, all_edges, new_green, red, log)
        else:
            new_red = red | {e}
            if _makes_own_triangle(n, new_red, e):
                child = _GREEN_WINS
            elif len(green) + len(new_red) == len(all_edges):
                child = _DRAW
            else:
                child = _minimax(n, all_edges, green, new_red, log)
        if best is None:
            best = child
        elif green_to_move:
            best = max(best, child)
        else:
            best = min(best, child)
    assert best is not None, "minimax called on a full board"
    if log is not None:
        log[(green, red)] = best
    return best


def reference_value(p: Position) -> GameValue:
    """Plain minimax value of a live position."""
    all_edges = list(itertools.combinations(range(p.n), 2))
    green = frozenset(p.green_pairs())
    red = frozenset(p.red_pairs())
    if len(green) + len(red) == len(all_edges):
        return GameValue.DRAW
    return _VALUE_NAMES[_minimax(p.n, all_edges, green, red, None)]


def full_walk(n: int) -> dict[tuple[frozenset, frozenset], GameValue]:
    """Value of every live position reachable from the empty board.

    One unmemoized minimax walk from the empty position; each live position
    the recursion evaluates is recorded on the way out. The recursion never
    reads the record, so results stay those of the plain reference solver.
    """
    all_edges = list(itertools.combinations(range(n), 2))
    log: dict[tuple[frozenset, frozenset], int] = {}
    _minimax(n, all_edges, frozenset(), frozenset(), log)
    return {k: _VALUE_NAMES[v] for k, v in log.items()}
