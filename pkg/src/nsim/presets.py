"""Named starting positions.

The drawn K5 is the complete coloring of K5 into a green 5-cycle and its
complementary red 5-cycle; all other presets place one or more copies of
it (possibly minus an edge) or the small 3-move opening configuration on a
larger board. Vertex placement is pinned so every preset is reproducible
byte for byte.
"""

from __future__ import annotations

from .board import BoardError, MAX_BOARD, Position, edge_index, from_edge_lists, position_to_doc

DRAWN_K5_GREEN = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))
DRAWN_K5_RED = ((0, 2), (1, 3), (2, 4), (0, 3), (1, 4))

# 3-move opening: green cherry f, g at vertex 0; red edge h off the cherry
# leaf 1; the uncolored edge e = (1, 2) closes the green cherry's triangle.
THM3_EDGES = {"e": (1, 2), "f": (0, 1), "g": (0, 2), "h": (1, 3)}

PRESET_NAMES = ("drawn-k5", "thm1", "thm2", "thm3", "prop-T", "prop-T-XY")


class PresetError(BoardError):
    pass


def _translated_drawn_k5(offset: int):
    green = [(i + offset, j + offset) for i, j in DRAWN_K5_GREEN]
    red = [(i + offset, j + offset) for i, j in DRAWN_K5_RED]
    return green, red


def build_preset(name: str, n: int | None = None, k: int | None = None) -> Position:
    """Construct a named preset position.

    drawn-k5(n):  the drawn K5 on vertices 0-4 inside K_n, 5 <= n <= 10.
    thm1(k):      k disjoint drawn K5 copies on n = 5k vertices, k in {1, 2}.
    thm2(n):      drawn-k5(n) minus the red edge (0, 2), 6 <= n <= 10.
    prop-T(n):    drawn-k5(n), named for boards with isolated vertices, n >= 6.
    prop-T-XY(7): prop-T(7) plus the green edge (5, 6) joining the isolated pair.
    thm3(n):      green (0,1), (0,2) and red (1,3) on K_n, 6 <= n <= 10.
    """
    if name == "thm1":
        if n is not None and k is None:
            if n % 5:
                raise PresetError("thm1 board size must be a multiple of 5")
            k = n // 5
        if k is None:
            raise PresetError("thm1 requires a copy count k")
        if not 1 <= k <= 2:
            raise PresetError(f"thm1 supports k in {{1, 2}}, got {k}")
        if n is not None and n != 5 * k:
            raise PresetError(f"thm1({k}) lives on n={5 * k}, got n={n}")
        green: list = []
        red: list = []
        for copy in range(k):
            g, r = _translated_drawn_k5(5 * copy)
            green += g
            red += r
        return from_edge_lists(5 * k, green, red)

    if k is not None:
        raise PresetError(f"preset {name!r} takes no copy count")

    if name == "drawn-k5":
        n = 5 if n is None else n
        if not 5 <= n <= MAX_BOARD:
            raise PresetError(f"drawn-k5 requires 5 <= n <= {MAX_BOARD}, got {n}")
        return from_edge_lists(n, DRAWN_K5_GREEN, DRAWN_K5_RED)

    if name == "prop-T":
        n = 6 if n is None else n
        if not 6 <= n <= MAX_BOARD:
            raise PresetError(f"prop-T requires 6 <= n <= {MAX_BOARD}, got {n}")
        return from_edge_lists(n, DRAWN_K5_GREEN, DRAWN_K5_RED)

    if name == "prop-T-XY":
        if n not in (None, 7):
            raise PresetError(f"prop-T-XY is defined only for n=7, got {n}")
        return from_edge_lists(7, DRAWN_K5_GREEN + ((5, 6),), DRAWN_K5_RED)

    if name == "thm2":
        n = 6 if n is None else n
        if not 6 <= n <= MAX_BOARD:
            raise PresetError(f"thm2 requires 6 <= n <= {MAX_BOARD}, got {n}")
        red = tuple(pair for pair in DRAWN_K5_RED if pair != (0, 2))
        return from_edge_lists(n, DRAWN_K5_GREEN, red)

    if name == "thm3":
        n = 6 if n is None else n
        if not 6 <= n <= MAX_BOARD:
            raise PresetError(f"thm3 requires 6 <= n <= {MAX_BOARD}, got {n}")
        e, f, g, h = (THM3_EDGES[x] for x in "efgh")
        # configuration constraints; a mis-transcription fails loudly here
        assert f[0] == g[0] == 0 and f[1] != g[1], "cherry edges must share vertex 0"
        assert set(e) == {f[1], g[1]}, "e must close the cherry's triangle"
        assert len(set(h) & set(e)) == 1, "h must meet e in exactly one vertex"
        p = from_edge_lists(n, (f, g), (h,))
        assert p.color_of(edge_index(*e, n)) is None, "e must be uncolored"
        return p

    raise PresetError(f"unknown preset {name!r}")


def preset_grid() -> list[dict]:
    """The supported preset grid, as served by the API."""
    grid = [
        ("drawn-k5", {"n": 5}),
        ("drawn-k5", {"n": 6}),
        ("drawn-k5", {"n": 7}),
        ("thm1", {"k": 2}),
        ("thm2", {"n": 6}),
        ("thm2", {"n": 7}),
        ("prop-T", {"n": 6}),
        ("prop-T", {"n": 7}),
        ("prop-T-XY", {"n": 7}),
        ("thm3", {"n": 6}),
        ("thm3", {"n": 7}),
    ]
    out = []
    for name, params in grid:
        p = build_preset(name, **params)
        out.append({"name": name, "params": params, "position": position_to_doc(p)})
    return out
