"""Vertex-permutation symmetry for n-Sim positions.

Provides the permutation action on positions, isomorphism and
color-swap-isomorphism testing with explicit witnesses, automorphism
groups, canonical keys (full enumeration, boards up to 7 vertices), and
orbits of uncolored edges. All searches are deterministic: the witness
returned is the lexicographically smallest image array.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .board import (
    BoardError,
    Position,
    check_board_size,
    edge_endpoints,
    edge_index,
    num_edges,
)

Perm = tuple[int, ...]

CANONICAL_MAX_BOARD = 7  # n! enumeration: 7! = 5040 permutations


class BoardTooLargeError(BoardError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """Permutation applying b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def invert(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, si in enumerate(s):
        out[si] = i
    return tuple(out)


def _check_perm(p: Position, s: Perm) -> None:
    if len(s) != p.n:
        raise BoardError(f"permutation length {len(s)} does not match board size {p.n}")
    if sorted(s) != list(range(p.n)):
        raise BoardError(f"{s!r} is not a permutation of 0..{p.n - 1}")


def perm_edge(s: Perm, e: int, n: int) -> int:
    """Image of edge id e under vertex permutation s."""
    i, j = edge_endpoints(e, n)
    a, b = s[i], s[j]
    if a > b:
        a, b = b, a
    return edge_index(a, b, n)


def _map_mask(mask: int, s: Perm, n: int) -> int:
    out = 0
    while mask:
        lsb = mask & -mask
        out |= 1 << perm_edge(s, lsb.bit_length() - 1, n)
        mask ^= lsb
    return out


def apply_permutation(p: Position, s: Perm) -> Position:
    """Relabel the endpoints of every colored edge; colors are preserved."""
    _check_perm(p, s)
    return Position(p.n, _map_mask(p.green, s, p.n), _map_mask(p.red, s, p.n))


def _color_matrix(p: Position) -> list[list[int]]:
    # 0 = uncolored, 1 = green, 2 = red
    n = p.n
    m = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        e = edge_index(i, j, n)
        c = 1 if (p.green >> e) & 1 else (2 if (p.red >> e) & 1 else 0)
        m[i][j] = m[j][i] = c
    return m


def _search_maps(p: Position, q: Position, swap: bool, find_all: bool = False) -> list[Perm]:
    """Backtracking search for vertex maps s with color_q(s(u), s(v)) equal to
    color_p(u, v) (or the swapped color when swap is set) for every pair.

    Vertices are assigned in index order and candidate images tried in
    ascending order, so the first solution is the lexicographic minimum.
    Per-vertex (green-degree, red-degree) signatures prune the search; the
    decomposed boards at n=10 resolve well under a second.
    """
    if p.n != q.n:
        raise BoardError(f"board sizes differ: {p.n} vs {q.n}")
    n = p.n
    a = _color_matrix(p)
    b = _color_matrix(q)
    remap = (0, 2, 1) if swap else (0, 1, 2)
    sig_a = [tuple(sorted(remap[a[v][u]] for u in range(n) if u != v)) for v in range(n)]
    sig_b = [tuple(sorted(b[v][u] for u in range(n) if u != v)) for v in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return []

    img = [-1] * n
    used = [False] * n
    found: list[Perm] = []

    def backtrack(v: int) -> bool:
        if v == n:
            found.append(tuple(img))
            return not find_all
        row = a[v]
        sig = sig_a[v]
        for w in range(n):
            if used[w] or sig != sig_b[w]:
                continue
            brow = b[w]
            ok = True
            for u in range(v):
                if remap[row[u]] != brow[img[u]]:
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                if backtrack(v + 1):
                    return True
                used[w] = False
                img[v] = -1
        return False

    backtrack(0)
    return found


def find_isomorphism(p: Position, q: Position) -> Perm | None:
    """A vertex permutation s with apply_permutation(p, s) == q, or None."""
    maps = _search_maps(p, q, swap=False)
    return maps[0] if maps else None


def find_color_swap_isomorphism(p: Position, q: Position) -> Perm | None:
    """A vertex permutation mapping p's green edges onto q's red edges and
    p's red edges onto q's green edges, or None."""
    maps = _search_maps(p, q, swap=True)
    return maps[0] if maps else None


def automorphism_group(p: Position) -> list[Perm]:
    """All color-preserving self-maps of p, in lexicographic order."""
    check_board_size(p.n)
    return _search_maps(p, p, swap=False, find_all=True)


@lru_cache(maxsize=None)
def _perm_edge_tables(n: int) -> tuple[tuple[int, ...], ...]:
    # edge-image table for every vertex permutation of range(n), n <= 7
    tables = []
    for s in itertools.permutations(range(n)):
        tables.append(tuple(perm_edge(s, e, n) for e in range(num_edges(n))))
    return tuple(tables)


def _min_relabeling(n: int, green: int, red: int) -> tuple[int, int]:
    best = (green, red)
    for table in _perm_edge_tables(n):
        g = 0
        m = green
        while m:
            lsb = m & -m
            g |= 1 << table[lsb.bit_length() - 1]
            m ^= lsb
        r = 0
        m = red
        while m:
            lsb = m & -m
            r |= 1 << table[lsb.bit_length() - 1]
            m ^= lsb
        if (g, r) < best:
            best = (g, r)
    return best


def canonical_key(p: Position) -> bytes:
    """Canonical byte key: minimum of the (green, red) mask pair over all
    vertex relabelings. Equal keys iff positions are isomorphic (color
    classes are NOT interchangeable: the key is deliberately color-sensitive).
    """
    if p.n > CANONICAL_MAX_BOARD:
        raise BoardTooLargeError(
            f"canonical keys use full permutation enumeration, limited to n <= {CANONICAL_MAX_BOARD}"
        )
    g, r = _min_relabeling(p.n, p.green, p.red)
    return bytes([p.n]) + g.to_bytes(6, "big") + r.to_bytes(6, "big")


def uncolored_edge_orbits(p: Position) -> list[tuple[int, ...]]:
    """Partition of the uncolored edge ids into orbits under the automorphism
    group of p, ordered by minimal edge id."""
    group = automorphism_group(p)
    open_edges = p.uncolored_edges()
    parent = {e: e for e in open_edges}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in group:
        for e in open_edges:
            a, b = find(e), find(perm_edge(s, e, p.n))
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits: dict[int, list[int]] = {}
    for e in open_edges:
        orbits.setdefault(find(e), []).append(e)
    return [tuple(sorted(v)) for _, v in sorted(orbits.items())]


def perm_to_doc(s: Perm) -> list[int]:
    return list(s)


def orbits_to_doc(p: Position, orbits: list[tuple[int, ...]]) -> list[list[list[int]]]:
    return [[list(edge_endpoints(e, p.n)) for e in orbit] for orbit in orbits]
