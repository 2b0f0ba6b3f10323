"""Exact solver and verification workbench for the game n-Sim.

Two players alternately color edges of the complete graph K_n (green moves
first); whoever first completes a triangle entirely in their own color
loses. This package represents positions, solves them exactly, reasons
about their symmetries, and mechanically checks the finite claims and
strategy-stealing premises around the drawn-K5 family of positions.
"""

from .board import (
    Color,
    GameState,
    GameStatus,
    Position,
    Triangle,
    apply_move,
    edge_endpoints,
    edge_index,
    from_edge_lists,
    mono_triangle,
    player_to_move,
    position_from_doc,
    position_to_doc,
    status,
    triangles,
)
from .presets import build_preset, preset_grid
from .solver import (
    BudgetExceededError,
    GameValue,
    SolveLimits,
    SolveResult,
    Solver,
    best_moves,
    engine_reply,
    solve,
)
from .symmetry import (
    apply_permutation,
    automorphism_group,
    canonical_key,
    find_color_swap_isomorphism,
    find_isomorphism,
    uncolored_edge_orbits,
)

__version__ = "0.1.0"

__all__ = [
    "Color",
    "GameState",
    "GameStatus",
    "Position",
    "Triangle",
    "apply_move",
    "edge_endpoints",
    "edge_index",
    "from_edge_lists",
    "mono_triangle",
    "player_to_move",
    "position_from_doc",
    "position_to_doc",
    "status",
    "triangles",
    "build_preset",
    "preset_grid",
    "BudgetExceededError",
    "GameValue",
    "SolveLimits",
    "SolveResult",
    "Solver",
    "best_moves",
    "engine_reply",
    "solve",
    "apply_permutation",
    "automorphism_group",
    "canonical_key",
    "find_color_swap_isomorphism",
    "find_isomorphism",
    "uncolored_edge_orbits",
    "__version__",
]
