"""Board representation for n-Sim.

Positions are edge 2-colorings of the complete graph K_n, stored as a pair
of edge bitmasks (green = first player, red = second player). Edges are
indexed by a fixed formula so that masks, triangle tables, and move
generation are all integer operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

MIN_BOARD = 3
MAX_BOARD = 10


class BoardError(ValueError):
    """Base class for invalid board inputs and illegal operations."""


class DuplicateEdgeError(BoardError):
    pass


class CountRuleError(BoardError):
    """|green| - |red| must be 0 (green to move) or 1 (red to move)."""


class DeadPositionError(BoardError):
    """Position contains a monochromatic triangle: terminal, not a live input."""


class EdgeOccupiedError(BoardError):
    pass


class GameOverError(BoardError):
    pass


class IllegalPositionError(BoardError):
    """Both colors contain a monochromatic triangle; unreachable in legal play."""


class Color(Enum):
    GREEN = "green"
    RED = "red"

    @property
    def opposite(self) -> "Color":
        return Color.RED if self is Color.GREEN else Color.GREEN


class GameState(Enum):
    LIVE = "live"
    FINISHED = "finished"
    DRAW = "draw"


@dataclass(frozen=True)
class GameStatus:
    state: GameState
    loser: Color | None = None

    @property
    def is_live(self) -> bool:
        return self.state is GameState.LIVE

    @classmethod
    def live(cls) -> "GameStatus":
        return cls(GameState.LIVE)

    @classmethod
    def draw(cls) -> "GameStatus":
        return cls(GameState.DRAW)

    @classmethod
    def finished(cls, loser: Color) -> "GameStatus":
        return cls(GameState.FINISHED, loser)


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def check_board_size(n: int) -> None:
    if not isinstance(n, int) or not MIN_BOARD <= n <= MAX_BOARD:
        raise BoardError(f"board size must be an integer in [{MIN_BOARD}, {MAX_BOARD}], got {n!r}")


def edge_index(i: int, j: int, n: int) -> int:
    """Index of edge (i, j), 0 <= i < j < n, in the fixed row-major order."""
    check_board_size(n)
    if not (0 <= i < j < n):
        raise BoardError(f"invalid vertex pair ({i}, {j}) for n={n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def edge_endpoints(e: int, n: int) -> tuple[int, int]:
    """Inverse of edge_index: the (i, j) pair with i < j for edge id e."""
    check_board_size(n)
    if not 0 <= e < num_edges(n):
        raise BoardError(f"edge id {e} out of range for n={n}")
    i = 0
    while e >= n - 1 - i:
        e -= n - 1 - i
        i += 1
    return i, i + 1 + e


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]
    edges: tuple[int, int, int]


@lru_cache(maxsize=None)
def triangles(n: int) -> tuple[Triangle, ...]:
    """All C(n,3) triangles of K_n in lexicographic vertex order."""
    check_board_size(n)
    out = []
    for a, b, c in itertools.combinations(range(n), 3):
        out.append(Triangle((a, b, c), (edge_index(a, b, n), edge_index(a, c, n), edge_index(b, c, n))))
    return tuple(out)


@lru_cache(maxsize=None)
def triangle_masks(n: int) -> tuple[int, ...]:
    """Per-triangle bitmask of its three edges, in triangles(n) order."""
    return tuple((1 << t.edges[0]) | (1 << t.edges[1]) | (1 << t.edges[2]) for t in triangles(n))


@lru_cache(maxsize=None)
def edge_pair_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """For each edge e: masks of the other two edges of every triangle through e.

    Playing e completes a triangle in color c iff some listed mask is a
    subset of c's edge mask. This is the solver's innermost test.
    """
    per_edge: list[list[int]] = [[] for _ in range(num_edges(n))]
    for t in triangles(n):
        e0, e1, e2 = t.edges
        per_edge[e0].append((1 << e1) | (1 << e2))
        per_edge[e1].append((1 << e0) | (1 << e2))
        per_edge[e2].append((1 << e0) | (1 << e1))
    return tuple(tuple(x) for x in per_edge)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _mask_edges(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return tuple(out)


@dataclass(frozen=True)
class Position:
    """Immutable n-Sim position: green and red edge bitmasks over K_n.

    Structural invariants (disjointness, mask range) are enforced here;
    the count rule and liveness are enforced at ingestion (from_edge_lists)
    and by the turn-taking operations.
    """

    n: int
    green: int
    red: int

    def __post_init__(self) -> None:
        check_board_size(self.n)
        full = (1 << num_edges(self.n)) - 1
        if self.green & ~full or self.red & ~full or self.green < 0 or self.red < 0:
            raise BoardError("edge mask out of range for board size")
        if self.green & self.red:
            raise BoardError("green and red edge sets must be disjoint")

    @classmethod
    def empty(cls, n: int) -> "Position":
        return cls(n, 0, 0)

    @property
    def green_count(self) -> int:
        return _popcount(self.green)

    @property
    def red_count(self) -> int:
        return _popcount(self.red)

    @property
    def occupied(self) -> int:
        return self.green | self.red

    @property
    def full_mask(self) -> int:
        return (1 << num_edges(self.n)) - 1

    def green_edges(self) -> tuple[int, ...]:
        return _mask_edges(self.green)

    def red_edges(self) -> tuple[int, ...]:
        return _mask_edges(self.red)

    def uncolored_edges(self) -> tuple[int, ...]:
        return _mask_edges(self.full_mask & ~self.occupied)

    def green_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(edge_endpoints(e, self.n) for e in self.green_edges())

    def red_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(edge_endpoints(e, self.n) for e in self.red_edges())

    def color_of(self, e: int) -> Color | None:
        if (self.green >> e) & 1:
            return Color.GREEN
        if (self.red >> e) & 1:
            return Color.RED
        return None


def _normalize_pairs(n: int, pairs, label: str) -> list[tuple[int, int]]:
    out = []
    for pair in pairs:
        pair = tuple(pair)
        if len(pair) != 2:
            raise BoardError(f"{label} entry {pair!r} is not a vertex pair")
        i, j = pair
        if not (isinstance(i, int) and isinstance(j, int)):
            raise BoardError(f"{label} entry {pair!r} is not a pair of integers")
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise BoardError(f"{label} entry ({i}, {j}) is not a valid edge for n={n}")
        out.append((min(i, j), max(i, j)))
    return out


def from_edge_lists(n: int, green, red) -> Position:
    """Validated ingestion of a live position from vertex-pair lists.

    Rejects duplicate edges, count-rule violations, and any position that
    already contains a monochromatic triangle (terminal positions are not
    live inputs).
    """
    check_board_size(n)
    gmask, rmask = _masks_from_lists(n, green, red)
    p = Position(n, gmask, rmask)
    for color, mask in ((Color.GREEN, gmask), (Color.RED, rmask)):
        tri = _first_mono(p.n, mask)
        if tri is not None:
            raise DeadPositionError(
                f"monochromatic {color.value} triangle {tri.vertices}: position is terminal"
            )
    _check_counts(p)
    return p


def _masks_from_lists(n: int, green, red) -> tuple[int, int]:
    gpairs = _normalize_pairs(n, green, "green")
    rpairs = _normalize_pairs(n, red, "red")
    seen: set[tuple[int, int]] = set()
    for pair in gpairs + rpairs:
        if pair in seen:
            raise DuplicateEdgeError(f"edge {pair} listed more than once")
        seen.add(pair)
    gmask = 0
    for i, j in gpairs:
        gmask |= 1 << edge_index(i, j, n)
    rmask = 0
    for i, j in rpairs:
        rmask |= 1 << edge_index(i, j, n)
    return gmask, rmask


def _check_counts(p: Position) -> None:
    if p.green_count - p.red_count not in (0, 1):
        raise CountRuleError(
            f"|green| - |red| must be 0 or 1, got {p.green_count} - {p.red_count}"
        )


def _first_mono(n: int, mask: int) -> Triangle | None:
    for tri, tmask in zip(triangles(n), triangle_masks(n)):
        if tmask & mask == tmask:
            return tri
    return None


def mono_triangle(p: Position, c: Color) -> Triangle | None:
    """First monochromatic triangle of color c in triangle order, if any."""
    return _first_mono(p.n, p.green if c is Color.GREEN else p.red)


def status(p: Position) -> GameStatus:
    green_tri = _first_mono(p.n, p.green)
    red_tri = _first_mono(p.n, p.red)
    if green_tri is not None and red_tri is not None:
        raise IllegalPositionError("both colors contain a monochromatic triangle")
    if green_tri is not None:
        return GameStatus.finished(Color.GREEN)
    if red_tri is not None:
        return GameStatus.finished(Color.RED)
    if p.occupied == p.full_mask:
        return GameStatus.draw()
    return GameStatus.live()


def player_to_move(p: Position) -> Color:
    diff = p.green_count - p.red_count
    if diff == 0:
        return Color.GREEN
    if diff == 1:
        return Color.RED
    raise CountRuleError(f"position violates the count rule: diff={diff}")


def apply_move(p: Position, e: int) -> Position:
    """Color edge e with the mover's color. Strict alternation, value semantics."""
    if not 0 <= e < num_edges(p.n):
        raise BoardError(f"edge id {e} out of range for n={p.n}")
    if not status(p).is_live:
        raise GameOverError("cannot move: game is over")
    if (p.occupied >> e) & 1:
        raise EdgeOccupiedError(f"edge {edge_endpoints(e, p.n)} is already colored")
    if player_to_move(p) is Color.GREEN:
        return Position(p.n, p.green | (1 << e), p.red)
    return Position(p.n, p.green, p.red | (1 << e))


# --- position text format -------------------------------------------------
#
# {"n": <int>, "green": [[i,j],...], "red": [[i,j],...]} with i<j and pairs
# sorted lexicographically on output. The parser accepts pairs in any order
# and optionally a "to_move" field, which must match the derived value.


def position_to_doc(p: Position) -> dict:
    return {
        "n": p.n,
        "green": [list(pair) for pair in sorted(p.green_pairs())],
        "red": [list(pair) for pair in sorted(p.red_pairs())],
    }


def position_from_doc(doc, allow_finished: bool = False) -> Position:
    """Parse the position text format.

    With allow_finished, a position containing a monochromatic triangle is
    returned instead of rejected (used by the move endpoint so it can answer
    "game over" rather than "bad input").
    """
    if not isinstance(doc, dict):
        raise BoardError("position document must be an object")
    missing = {"n", "green", "red"} - set(doc)
    if missing:
        raise BoardError(f"position document missing fields: {sorted(missing)}")
    n = doc["n"]
    check_board_size(n)
    if not allow_finished:
        p = from_edge_lists(n, doc["green"], doc["red"])
    else:
        gmask, rmask = _masks_from_lists(n, doc["green"], doc["red"])
        p = Position(n, gmask, rmask)
        _check_counts(p)
    to_move = doc.get("to_move")
    if to_move is not None:
        if to_move not in ("green", "red"):
            raise BoardError(f'invalid to_move value {to_move!r}')
        if to_move != player_to_move(p).value:
            raise BoardError(
                f'to_move field says {to_move!r} but counts derive {player_to_move(p).value!r}'
            )
    return p


def status_to_doc(s: GameStatus) -> dict:
    return {"state": s.state.value, "loser": s.loser.value if s.loser else None}
