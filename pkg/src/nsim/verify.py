"""Mechanical checks behind every finite claim and stealing premise.

Each check returns a report whose witnesses re-validate: a frame
isomorphism is re-applied and compared edge for edge, an insurance
triangle is re-checked against the coloring it must protect. Solver-backed
theorem checks run the exact solver on the named preset and assert the
claimed outcome, including per-move claims.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import oracle
from .board import (
    BoardError,
    Color,
    Position,
    Triangle,
    apply_move,
    edge_endpoints,
    edge_index,
    num_edges,
    player_to_move,
    status,
    triangle_masks,
    triangles,
)
from .presets import THM3_EDGES, build_preset
from .solver import (
    BudgetExceededError,
    GameValue,
    SolveLimits,
    Solver,
)
from .symmetry import (
    Perm,
    apply_permutation,
    automorphism_group,
    canonical_key,
    find_color_swap_isomorphism,
    find_isomorphism,
    uncolored_edge_orbits,
)

_PROPERTY_SEED = 987001


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class StealReport:
    """Pass/fail record of strategy-stealing premises with witnesses."""

    passed: bool
    counts_ok: bool
    frame_iso: Perm | None
    insurance_triangle: Triangle | None
    orbit_count: int
    items: list[CheckItem] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def to_doc(self, n: int) -> dict:
        tri = self.insurance_triangle
        return {
            "passed": self.passed,
            "counts_ok": self.counts_ok,
            "frame_iso": list(self.frame_iso) if self.frame_iso else None,
            "insurance_triangle": {
                "vertices": list(tri.vertices),
                "edges": [list(edge_endpoints(e, n)) for e in tri.edges],
            }
            if tri
            else None,
            "orbit_count": self.orbit_count,
            "items": [
                {"name": i.name, "passed": i.passed, "detail": i.detail} for i in self.items
            ],
            "extras": self.extras,
        }


@dataclass
class VerifyReport:
    name: str
    passed: bool
    budget_hit: bool = False
    elapsed: float = 0.0
    data: dict = field(default_factory=dict)

    def to_doc(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "budget_hit": self.budget_hit,
            "data": self.data,
            "stats": {"elapsed_seconds": round(self.elapsed, 3)},
        }


# --- stealing-premise checks ------------------------------------------------


def _swap_frame(p: Position, extra_red: int | None = None) -> Position:
    """The mover-swapped pretend frame: red edges (plus an optional extra)
    seen as green and vice versa. May violate the count rule; used only as
    isomorphism-search input."""
    red = p.red | (1 << extra_red if extra_red is not None else 0)
    return Position(p.n, red, p.green)


def _validate_swap_witness(a: Position, b: Position, w: Perm) -> bool:
    image = apply_permutation(a, w)
    return image.green == b.red and image.red == b.green


def _find_insurance(n: int, covered_edge: int, backing_mask: int) -> Triangle | None:
    """First triangle through covered_edge whose other two edges all lie in
    backing_mask."""
    ebit = 1 << covered_edge
    for tri, tmask in zip(triangles(n), triangle_masks(n)):
        if tmask & ebit and (tmask ^ ebit) & backing_mask == tmask ^ ebit:
            return tri
    return None


def check_ignore_and_reply(p: Position, g: int, r: int) -> StealReport:
    """Premises for ignoring PI's fresh green edge g and replying red at r.

    Checks that (1) counts are balanced, (2) the pretend frame (p plus r in
    red) is color-swap-isomorphic to the assumed winning frame (p plus g in
    green), and (3) a triangle through g has its other two edges red once g
    and r are placed, so the ignored edge can never be forced.
    """
    if not status(p).is_live:
        raise BoardError("position must be live")
    if player_to_move(p) is not Color.GREEN:
        raise BoardError("green must be to move")
    if g == r:
        raise BoardError("g and r must differ")
    for e in (g, r):
        if not 0 <= e < num_edges(p.n) or p.color_of(e) is not None:
            raise BoardError(f"edge {e} must be uncolored")

    counts_ok = p.green_count == p.red_count
    items = [CheckItem("counts-balanced", counts_ok, f"{p.green_count} green, {p.red_count} red")]

    pretend = Position(p.n, p.green, p.red | (1 << r))
    assumed = apply_move(p, g)
    witness = find_color_swap_isomorphism(pretend, assumed)
    if witness is not None:
        ok = _validate_swap_witness(pretend, assumed, witness)
        items.append(CheckItem("frame-witness", ok, f"perm {list(witness)} re-validates: {ok}"))
    else:
        items.append(CheckItem("frame-witness", False, "no color-swap isomorphism found"))

    backing = p.red | (1 << r)
    insurance = _find_insurance(p.n, g, backing)
    if insurance is not None:
        items.append(
            CheckItem("insurance", True, f"triangle {insurance.vertices} backs the ignored edge")
        )
    else:
        items.append(CheckItem("insurance", False, "no red triangle covers the ignored edge"))

    orbit_count = len(uncolored_edge_orbits(p))
    return StealReport(
        passed=all(i.passed for i in items),
        counts_ok=counts_ok,
        frame_iso=witness,
        insurance_triangle=insurance,
        orbit_count=orbit_count,
        items=items,
        extras={"g": list(edge_endpoints(g, p.n)), "r": list(edge_endpoints(r, p.n))},
    )


def check_pretend_extra_red(p: Position, e: int) -> StealReport:
    """Premises for PII pretending the missing edge e is already red: the
    completed position must be color-swap-isomorphic to itself, and a
    triangle through e must have both other edges green so PI can never
    play e."""
    if not status(p).is_live:
        raise BoardError("position must be live")
    if player_to_move(p) is not Color.RED:
        raise BoardError("red must be to move")
    if not 0 <= e < num_edges(p.n) or p.color_of(e) is not None:
        raise BoardError(f"edge {e} must be uncolored")

    counts_ok = p.green_count == p.red_count + 1
    items = [
        CheckItem("counts-red-to-move", counts_ok, f"{p.green_count} green, {p.red_count} red")
    ]

    completed = Position(p.n, p.green, p.red | (1 << e))
    witness = find_color_swap_isomorphism(completed, completed)
    if witness is not None:
        ok = _validate_swap_witness(completed, completed, witness)
        items.append(
            CheckItem("swap-self-witness", ok, f"perm {list(witness)} re-validates: {ok}")
        )
    else:
        items.append(CheckItem("swap-self-witness", False, "completed position is not swap-self-isomorphic"))

    insurance = _find_insurance(p.n, e, p.green)
    items.append(
        CheckItem(
            "insurance",
            insurance is not None,
            f"triangle {insurance.vertices} has two green edges through e"
            if insurance
            else "no green triangle covers e",
        )
    )

    return StealReport(
        passed=all(i.passed for i in items),
        counts_ok=counts_ok,
        frame_iso=witness,
        insurance_triangle=insurance,
        orbit_count=len(uncolored_edge_orbits(p)),
        items=items,
        extras={"e": list(edge_endpoints(e, p.n))},
    )


def thm3_premises_for(
    u: Position,
    e: tuple[int, int],
    f: tuple[int, int],
    g: tuple[int, int],
    h: tuple[int, int],
) -> StealReport:
    """Premise checks for a 3-move opening configuration with designated
    edges: green cherry f, g; red edge h; uncolored closing edge e."""
    n = u.n
    eid, fid, gid, hid = (edge_index(min(x), max(x), n) for x in (e, f, g, h))
    if u.color_of(fid) is not Color.GREEN or u.color_of(gid) is not Color.GREEN:
        raise BoardError("f and g must be green in the configuration")
    if u.color_of(hid) is not Color.RED:
        raise BoardError("h must be red in the configuration")
    if u.color_of(eid) is not None:
        raise BoardError("e must be uncolored")

    items = []
    pretend = Position(n, 1 << gid, (1 << eid) | (1 << hid))
    witness = find_color_swap_isomorphism(pretend, u)
    if witness is not None:
        ok = _validate_swap_witness(pretend, u, witness)
        items.append(CheckItem("frame-witness", ok, f"perm {list(witness)} re-validates: {ok}"))
    else:
        items.append(CheckItem("frame-witness", False, "pretend frame is not a color-swapped configuration"))

    insurance = _find_insurance(n, eid, u.green)
    good_tri = insurance is not None and set(insurance.edges) == {eid, fid, gid}
    items.append(
        CheckItem(
            "insurance",
            good_tri,
            f"triangle {insurance.vertices} = (e, f, g)" if good_tri else "e, f, g do not form a green-backed triangle",
        )
    )

    return StealReport(
        passed=all(i.passed for i in items),
        counts_ok=u.green_count == u.red_count + 1,
        frame_iso=witness,
        insurance_triangle=insurance,
        orbit_count=len(uncolored_edge_orbits(u)),
        items=items,
        extras={"e": list(e), "f": list(f), "g": list(g), "h": list(h)},
    )


def check_thm3_premises(n: int) -> StealReport:
    """Premises for the 3-move configuration on K_n, 6 <= n <= 7."""
    if not 6 <= n <= 7:
        raise BoardError(f"supported board sizes are 6 and 7, got {n}")
    u = build_preset("thm3", n)
    return thm3_premises_for(u, THM3_EDGES["e"], THM3_EDGES["f"], THM3_EDGES["g"], THM3_EDGES["h"])


def check_thm1_premises(k: int) -> StealReport:
    """Premises for the decomposed two-copy board: swap-self isomorphism,
    a single uncolored-edge orbit, and an (ignored, reply) edge pair whose
    premises all hold. Does not solve the n=10 game."""
    if k != 2:
        raise BoardError("premise checks are defined for k=2 (n=10)")
    s = build_preset("thm1", k=k)
    items = []
    counts_ok = s.green_count == s.red_count
    items.append(CheckItem("counts-balanced", counts_ok, f"{s.green_count} green, {s.red_count} red"))

    witness = find_color_swap_isomorphism(s, s)
    if witness is not None:
        ok = _validate_swap_witness(s, s, witness)
        items.append(CheckItem("swap-self-witness", ok, f"perm {list(witness)} re-validates: {ok}"))
    else:
        items.append(CheckItem("swap-self-witness", False, "no color-swap self-isomorphism"))

    group = automorphism_group(s)
    orbits = uncolored_edge_orbits(s)
    orbit_count = len(orbits)
    items.append(
        CheckItem(
            "single-move-orbit",
            orbit_count == 1,
            f"{orbit_count} orbit(s) of {len(s.uncolored_edges())} uncolored edges; |Aut| = {len(group)}",
        )
    )

    pair_report = None
    pair = None
    g = min(s.uncolored_edges())
    for r in s.uncolored_edges():
        if r == g:
            continue
        if _find_insurance(s.n, g, s.red | (1 << r)) is None:
            continue
        candidate = check_ignore_and_reply(s, g, r)
        if candidate.passed:
            pair_report = candidate
            pair = (g, r)
            break
    items.append(
        CheckItem(
            "ignore-and-reply-pair",
            pair_report is not None,
            f"g={edge_endpoints(pair[0], s.n)}, r={edge_endpoints(pair[1], s.n)}"
            if pair
            else "no passing (g, r) pair found",
        )
    )

    return StealReport(
        passed=all(i.passed for i in items),
        counts_ok=counts_ok,
        frame_iso=witness,
        insurance_triangle=pair_report.insurance_triangle if pair_report else None,
        orbit_count=orbit_count,
        items=items,
        extras={
            "aut_order": len(group),
            "pair": {
                "g": list(edge_endpoints(pair[0], s.n)),
                "r": list(edge_endpoints(pair[1], s.n)),
            }
            if pair
            else None,
        },
    )


# --- enumeration checks -------------------------------------------------------


def _is_single_cycle(n: int, pairs: list[tuple[int, int]]) -> bool:
    # all degrees 2 and one connected component covering all n vertices
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for i, j in pairs:
        adj[i].append(j)
        adj[j].append(i)
    if any(len(nbrs) != 2 for nbrs in adj.values()):
        return False
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n


def verify_drawn_k5_uniqueness() -> VerifyReport:
    """Enumerate all balanced complete colorings of K5; count draws and
    their isomorphism classes."""
    t0 = time.monotonic()
    tmasks = triangle_masks(5)
    full = (1 << 10) - 1
    draws = []
    checked = 0
    for combo in itertools.combinations(range(10), 5):
        checked += 1
        green = 0
        for e in combo:
            green |= 1 << e
        red = full ^ green
        if any(t & green == t or t & red == t for t in tmasks):
            continue
        draws.append(Position(5, green, red))
    keys = {canonical_key(p) for p in draws}
    cycles_ok = all(_is_single_cycle(5, list(p.green_pairs())) for p in draws)
    passed = len(draws) == 12 and len(keys) == 1 and cycles_ok
    return VerifyReport(
        "drawn-k5-unique",
        passed,
        elapsed=time.monotonic() - t0,
        data={
            "colorings_checked": checked,
            "labeled_draws": len(draws),
            "isomorphism_classes": len(keys),
            "all_green_classes_are_5_cycles": cycles_ok,
        },
    )


def verify_k6_no_draw() -> VerifyReport:
    """Check all 2^15 complete 2-colorings of K6 for a monochromatic triangle."""
    t0 = time.monotonic()
    tmasks = triangle_masks(6)
    no_mono = 0
    for green in range(1 << 15):
        for t in tmasks:
            masked = t & green
            if masked == t or masked == 0:
                break
        else:
            no_mono += 1

    # the drawn K5 extended by every coloring of the 5 edges at vertex 5
    base = build_preset("drawn-k5", 6)
    join_edges = [edge_index(v, 5, 6) for v in range(5)]
    extension_misses = 0
    for bits in range(1 << 5):
        green = base.green
        red = base.red
        for idx, e in enumerate(join_edges):
            if (bits >> idx) & 1:
                green |= 1 << e
            else:
                red |= 1 << e
        if not any(t & green == t or t & red == t for t in tmasks):
            extension_misses += 1

    passed = no_mono == 0 and extension_misses == 0
    return VerifyReport(
        "no-draw-6",
        passed,
        elapsed=time.monotonic() - t0,
        data={
            "colorings_checked": 1 << 15,
            "colorings_without_mono_triangle": no_mono,
            "drawn_k5_extensions_checked": 32,
            "extensions_without_mono_triangle": extension_misses,
        },
    )


def verify_prop1_structure() -> VerifyReport:
    """Every 3 vertices of the drawn K5 span at least one green and one red
    edge, so three same-colored spokes from a hub force a triangle."""
    t0 = time.monotonic()
    p = build_preset("drawn-k5", 5)
    missing_green = 0
    missing_red = 0
    checked = 0
    for trio in itertools.combinations(range(5), 3):
        checked += 1
        edges = [edge_index(a, b, 5) for a, b in itertools.combinations(trio, 2)]
        if not any((p.green >> e) & 1 for e in edges):
            missing_green += 1
        if not any((p.red >> e) & 1 for e in edges):
            missing_red += 1
    passed = missing_green == 0 and missing_red == 0
    return VerifyReport(
        "prop1-structure",
        passed,
        elapsed=time.monotonic() - t0,
        data={
            "subsets_checked": checked,
            "subsets_without_green": missing_green,
            "subsets_without_red": missing_red,
        },
    )


# --- solver-backed theorem checks ------------------------------------------


THEOREM_GRID = {
    "slany6": (6,),
    "prop1i": (6, 7),
    "prop1ii": (7,),
    "thm2": (6, 7),
    "thm3": (6, 7),
}


def _value_name(v: GameValue) -> str:
    return v.value


def verify_theorem(name: str, n: int, limits: SolveLimits | None = None) -> VerifyReport:
    """Solve the named preset instance and assert the claimed outcome."""
    if name not in THEOREM_GRID:
        raise BoardError(f"unknown theorem check {name!r}")
    if n not in THEOREM_GRID[name]:
        raise BoardError(f"{name} is supported for n in {THEOREM_GRID[name]}, got {n}")
    t0 = time.monotonic()
    report_name = f"{name}-n{n}" if len(THEOREM_GRID[name]) > 1 else name
    solver = Solver(n, limits=limits)
    try:
        data: dict = {}
        if name == "slany6":
            value = solver.solve(Position.empty(6))
            passed = value is GameValue.RED_WINS
            data = {"value": _value_name(value), "expected": "RedWins"}
        elif name == "prop1i":
            p = build_preset("prop-T", n)
            join = [edge_index(v, w, n) for v in range(5) for w in range(5, n)]
            values = {}
            for e in join:
                values[e] = solver.solve(apply_move(p, e))
            all_red = all(v is GameValue.RED_WINS for v in values.values())
            orbits = uncolored_edge_orbits(p)
            join_orbit = tuple(sorted(join)) in orbits
            passed = all_red and join_orbit
            data = {
                "join_moves": len(join),
                "join_values": sorted({_value_name(v) for v in values.values()}),
                "join_edges_form_one_orbit": join_orbit,
            }
        elif name == "prop1ii":
            p = build_preset("prop-T", 7)
            root = solver.solve(p)
            moves = solver.best_moves(p)
            winning = [e for e, v in moves if v is GameValue.GREEN_WINS]
            xy = edge_index(5, 6, 7)
            from_xy = solver.solve(build_preset("prop-T-XY", 7))
            passed = (
                root is GameValue.GREEN_WINS
                and winning == [xy]
                and from_xy is GameValue.GREEN_WINS
            )
            data = {
                "value": _value_name(root),
                "winning_first_moves": [list(edge_endpoints(e, 7)) for e in winning],
                "value_after_xy_join": _value_name(from_xy),
            }
        elif name == "thm2":
            p = build_preset("thm2", n)
            root = solver.solve(p)
            moves = dict(solver.best_moves(p))
            completing = moves[edge_index(0, 2, n)]
            expected_completing = GameValue.GREEN_WINS if n == 7 else GameValue.RED_WINS
            has_red_win = any(v is GameValue.RED_WINS for v in moves.values())
            passed = (
                root is GameValue.RED_WINS
                and completing is expected_completing
                and has_red_win
            )
            data = {
                "value": _value_name(root),
                "completing_move_value": _value_name(completing),
                "expected_completing_move_value": _value_name(expected_completing),
                "red_winning_move_exists": has_red_win,
            }
        else:  # thm3
            p = build_preset("thm3", n)
            value = solver.solve(p)
            passed = value is GameValue.RED_WINS
            data = {"value": _value_name(value), "expected": "RedWins"}
        return VerifyReport(
            report_name,
            passed,
            elapsed=time.monotonic() - t0,
            data={**data, "nodes": solver.stats.nodes},
        )
    except BudgetExceededError as exc:
        return VerifyReport(
            report_name,
            False,
            budget_hit=True,
            elapsed=time.monotonic() - t0,
            data={"nodes": exc.stats.nodes},
        )


def attempt_thm1_full_solve(limits: SolveLimits | None = None) -> VerifyReport:
    """Optional unbounded-in-spirit run: solve the two-copy n=10 board.
    Expected to exhaust any reasonable budget; carries no acceptance weight."""
    t0 = time.monotonic()
    solver = Solver(10, limits=limits)
    try:
        value = solver.solve(build_preset("thm1", k=2))
        return VerifyReport(
            "thm1-full-solve",
            value is GameValue.RED_WINS,
            elapsed=time.monotonic() - t0,
            data={"value": _value_name(value), "nodes": solver.stats.nodes},
        )
    except BudgetExceededError as exc:
        return VerifyReport(
            "thm1-full-solve",
            False,
            budget_hit=True,
            elapsed=time.monotonic() - t0,
            data={"nodes": exc.stats.nodes},
        )


# --- cross-checks against the reference solver -------------------------------


def _position_from_pairs(n: int, green, red) -> Position:
    gmask = 0
    for i, j in green:
        gmask |= 1 << edge_index(i, j, n)
    rmask = 0
    for i, j in red:
        rmask |= 1 << edge_index(i, j, n)
    return Position(n, gmask, rmask)


def random_live_position(n: int, colored: int, rng: random.Random) -> Position:
    """Random live position reached by a playout of `colored` non-losing moves."""
    from .board import edge_pair_masks

    pair_masks = edge_pair_masks(n)
    total = num_edges(n)
    while True:
        green = red = 0
        ok = True
        for ply in range(colored):
            mover_green = ply % 2 == 0
            mover = green if mover_green else red
            occupied = green | red
            safe = [
                e
                for e in range(total)
                if not (occupied >> e) & 1
                and not any(pm & mover == pm for pm in pair_masks[e])
            ]
            if not safe:
                ok = False
                break
            e = rng.choice(safe)
            if mover_green:
                green |= 1 << e
            else:
                red |= 1 << e
        if ok:
            return Position(n, green, red)


def verify_oracle_equivalence(random_n6_samples: int = 1000) -> VerifyReport:
    """Optimized solver vs the plain reference solver: every live position
    reachable on boards up to n=5, plus random deep n=6 positions."""
    t0 = time.monotonic()
    mismatches = 0
    counts = {}
    for n in (3, 4, 5):
        walked = oracle.full_walk(n)
        solver = Solver(n)
        for (green, red), expected in walked.items():
            p = _position_from_pairs(n, green, red)
            if solver.solve(p) is not expected:
                mismatches += 1
        counts[f"n{n}_positions"] = len(walked)

    rng = random.Random(_PROPERTY_SEED)
    solver6 = Solver(6)
    for _ in range(random_n6_samples):
        p = random_live_position(6, rng.randint(7, 12), rng)
        if solver6.solve(p) is not oracle.reference_value(p):
            mismatches += 1
    counts["random_n6_positions"] = random_n6_samples

    return VerifyReport(
        "oracle-equivalence",
        mismatches == 0,
        elapsed=time.monotonic() - t0,
        data={**counts, "mismatches": mismatches},
    )


# --- property suite -----------------------------------------------------------


def _random_perm(n: int, rng: random.Random) -> Perm:
    s = list(range(n))
    rng.shuffle(s)
    return tuple(s)


def verify_properties(
    relabel_positions: int = 50,
    relabel_perms: int = 100,
    coherence_positions: int = 30,
    consistency_positions: int = 30,
) -> VerifyReport:
    """Randomized invariants: relabeling invariance of values, orbit-value
    coherence, isomorphism-witness re-validation, and negamax
    self-consistency. Deterministically seeded."""
    t0 = time.monotonic()
    rng = random.Random(_PROPERTY_SEED)
    violations = {
        "relabel": 0,
        "orbit_coherence": 0,
        "witness": 0,
        "self_consistency": 0,
    }
    solvers = {n: Solver(n) for n in (4, 5, 6)}

    # relabeling invariance: solve(p) == solve(p^s)
    for _ in range(relabel_positions):
        n = rng.choice([4, 5, 6])
        open_target = rng.randint(6, 9)
        colored = max(0, num_edges(n) - open_target)
        p = random_live_position(n, colored, rng)
        base = solvers[n].solve(p)
        for _ in range(relabel_perms):
            s = _random_perm(n, rng)
            if solvers[n].solve(apply_permutation(p, s)) is not base:
                violations["relabel"] += 1

    # orbit-value coherence: equal values inside each uncolored-edge orbit
    for _ in range(coherence_positions):
        n = rng.choice([5, 6])
        colored = max(0, num_edges(n) - rng.randint(8, 12))
        p = random_live_position(n, colored, rng)
        values = dict(solvers[n].best_moves(p))
        for orbit in uncolored_edge_orbits(p):
            if len({values[e] for e in orbit}) != 1:
                violations["orbit_coherence"] += 1

    # witness re-validation on isomorphic pairs (both flavors)
    for _ in range(coherence_positions):
        n = rng.choice([5, 6])
        p = random_live_position(n, rng.randint(3, 7), rng)
        s = _random_perm(n, rng)
        q = apply_permutation(p, s)
        w = find_isomorphism(p, q)
        if w is None or apply_permutation(p, w) != q:
            violations["witness"] += 1
        swapped_q = apply_permutation(Position(n, p.red, p.green), s)
        w2 = find_color_swap_isomorphism(p, swapped_q)
        if w2 is None or not _validate_swap_witness(p, swapped_q, w2):
            violations["witness"] += 1

    # negamax self-consistency: root value equals mover-optimum over children
    for _ in range(consistency_positions):
        n = rng.choice([5, 6])
        colored = max(0, num_edges(n) - rng.randint(6, 10))
        p = random_live_position(n, colored, rng)
        mover = player_to_move(p)
        rank = {
            (GameValue.GREEN_WINS if mover is Color.GREEN else GameValue.RED_WINS): 2,
            GameValue.DRAW: 1,
            (GameValue.RED_WINS if mover is Color.GREEN else GameValue.GREEN_WINS): 0,
        }
        moves = solvers[n].best_moves(p)
        best = max(moves, key=lambda ev: rank[ev[1]])[1]
        if solvers[n].solve(p) is not best:
            violations["self_consistency"] += 1

    passed = all(v == 0 for v in violations.values())
    return VerifyReport(
        "properties",
        passed,
        elapsed=time.monotonic() - t0,
        data={
            "relabel_checks": relabel_positions * relabel_perms,
            "violations": violations,
        },
    )


# --- registry ---------------------------------------------------------------


def _steal_premises(limits: SolveLimits | None = None) -> list[VerifyReport]:
    out = []

    t0 = time.monotonic()
    thm1 = check_thm1_premises(2)
    rep = VerifyReport(
        "thm1-premises",
        thm1.passed and thm1.orbit_count == 1,
        elapsed=time.monotonic() - t0,
        data=thm1.to_doc(10),
    )
    out.append(rep)

    for n in (6, 7):
        t0 = time.monotonic()
        p = build_preset("thm2", n)
        r = check_pretend_extra_red(p, edge_index(0, 2, n))
        out.append(
            VerifyReport(
                f"pretend-extra-red-n{n}", r.passed, elapsed=time.monotonic() - t0, data=r.to_doc(n)
            )
        )

    for n in (6, 7):
        t0 = time.monotonic()
        p = build_preset("prop-T", n)
        r = check_ignore_and_reply(p, edge_index(0, 5, n), edge_index(2, 5, n))
        out.append(
            VerifyReport(
                f"ignore-and-reply-n{n}", r.passed, elapsed=time.monotonic() - t0, data=r.to_doc(n)
            )
        )

    for n in (6, 7):
        t0 = time.monotonic()
        r = check_thm3_premises(n)
        out.append(
            VerifyReport(
                f"thm3-premises-n{n}", r.passed, elapsed=time.monotonic() - t0, data=r.to_doc(n)
            )
        )
    return out


def _theorem_reports(name: str, limits: SolveLimits | None, n: int | None = None) -> list[VerifyReport]:
    sizes = THEOREM_GRID[name] if n is None else (n,)
    return [verify_theorem(name, size, limits) for size in sizes]


CHECK_NAMES = (
    "drawn-k5-unique",
    "no-draw-6",
    "prop1-structure",
    "slany6",
    "prop1i",
    "prop1ii",
    "thm2",
    "thm3",
    "steal-premises",
    "oracle-equivalence",
    "properties",
)


def run_checks(
    names,
    limits: SolveLimits | None = None,
    n: int | None = None,
    attempt_full_solve: bool = False,
) -> list[VerifyReport]:
    """Run the named checks (or all of them) and return their reports."""
    reports: list[VerifyReport] = []
    for name in names:
        if name == "drawn-k5-unique":
            reports.append(verify_drawn_k5_uniqueness())
        elif name == "no-draw-6":
            reports.append(verify_k6_no_draw())
        elif name == "prop1-structure":
            reports.append(verify_prop1_structure())
        elif name in THEOREM_GRID:
            reports.extend(_theorem_reports(name, limits, n))
        elif name == "steal-premises":
            reports.extend(_steal_premises(limits))
        elif name == "oracle-equivalence":
            reports.append(verify_oracle_equivalence())
        elif name == "properties":
            reports.append(verify_properties())
        else:
            raise BoardError(f"unknown check {name!r}")
    if attempt_full_solve:
        reports.append(attempt_thm1_full_solve(limits))
    return reports
