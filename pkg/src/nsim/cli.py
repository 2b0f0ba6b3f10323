"""Command-line front end.

All subcommands are thin wrappers over the library: they parse a position
(from a file, standard input, or a preset name), call the corresponding
operation, and print machine-readable JSON on stdout. Diagnostics go to
stderr. Exit codes: 0 success or all checks passed, 1 verification
failure, 2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify
from .board import (
    BoardError,
    position_from_doc,
    position_to_doc,
    edge_endpoints,
    player_to_move,
    status,
    status_to_doc,
)
from .presets import PRESET_NAMES, build_preset
from .solver import BudgetExceededError, SolveLimits, Solver
from .symmetry import (
    BoardTooLargeError,
    canonical_key,
    find_color_swap_isomorphism,
    find_isomorphism,
    orbits_to_doc,
    uncolored_edge_orbits,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    pass


def _load_position(source: str, n: int | None, k: int | None):
    if source == "-":
        try:
            doc = json.load(sys.stdin)
        except json.JSONDecodeError as exc:
            raise CliError(f"invalid JSON on stdin: {exc}")
        return position_from_doc(doc)
    if os.path.exists(source):
        try:
            with open(source) as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CliError(f"invalid JSON in {source}: {exc}")
        return position_from_doc(doc)
    if source in PRESET_NAMES:
        return build_preset(source, n=n, k=k)
    raise CliError(f"position source {source!r} is neither a file, '-', nor a preset name")


def _limits(args) -> SolveLimits:
    kwargs = {}
    if args.max_nodes is not None:
        kwargs["max_nodes"] = args.max_nodes
    if args.max_seconds is not None:
        kwargs["max_seconds"] = args.max_seconds
    return SolveLimits(**kwargs)


def _emit(doc) -> None:
    print(json.dumps(doc))


def _add_position_arg(sub) -> None:
    sub.add_argument(
        "position",
        nargs="?",
        default="-",
        help="position file, '-' for stdin (default), or a preset name",
    )
    sub.add_argument("--n", type=int, default=None, help="board size for presets")
    sub.add_argument("--k", type=int, default=None, help="copy count for the thm1 preset")


def _add_budget_args(sub) -> None:
    sub.add_argument("--max-nodes", type=int, default=None, help="node budget")
    sub.add_argument("--max-seconds", type=float, default=None, help="time budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsim", description="Exact n-Sim solver and verification workbench"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("solve", "exact value of a position"),
        ("best-moves", "value of every uncolored edge"),
        ("reply", "deterministic perfect reply"),
    ):
        sub = subs.add_parser(name, help=help_text)
        _add_position_arg(sub)
        _add_budget_args(sub)
        sub.add_argument(
            "--canonical-memo",
            action="store_true",
            help="memoize on canonical keys (boards up to 7 vertices)",
        )

    sub = subs.add_parser("status", help="live/finished/draw status of a position")
    _add_position_arg(sub)

    sub = subs.add_parser("iso", help="isomorphism witness between two positions")
    sub.add_argument("first", help="position file, '-', or preset name")
    sub.add_argument("second", help="position file, '-', or preset name")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument(
        "--color-swap", action="store_true", help="search for a color-swap isomorphism"
    )

    sub = subs.add_parser("canon", help="canonical key of a position (n <= 7)")
    _add_position_arg(sub)

    sub = subs.add_parser("orbits", help="uncolored-edge orbits under the automorphism group")
    _add_position_arg(sub)

    sub = subs.add_parser("preset", help="emit a named preset position")
    sub.add_argument("name", choices=PRESET_NAMES)
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--k", type=int, default=None)

    sub = subs.add_parser("verify", help="run verification checks")
    sub.add_argument("check", help="check name or 'all'")
    sub.add_argument("--n", type=int, default=None, help="restrict a theorem check to one board size")
    _add_budget_args(sub)
    sub.add_argument(
        "--attempt-full-solve",
        action="store_true",
        help="additionally attempt the full n=10 two-copy solve (expected to exhaust the budget)",
    )

    sub = subs.add_parser("serve", help="run the HTTP service")
    sub.add_argument("--port", type=int, default=8080)
    sub.add_argument("--host", default="127.0.0.1")

    return parser


def _cmd_solve(args) -> int:
    p = _load_position(args.position, args.n, args.k)
    solver = Solver(p.n, limits=_limits(args), canonical_memo=args.canonical_memo)
    value = solver.solve(p)
    _emit({"value": value.value, "stats": solver.stats.to_doc()})
    return EXIT_OK


def _cmd_best_moves(args) -> int:
    p = _load_position(args.position, args.n, args.k)
    solver = Solver(p.n, limits=_limits(args), canonical_memo=args.canonical_memo)
    moves = solver.best_moves(p)
    _emit(
        {
            "to_move": player_to_move(p).value,
            "moves": [
                {"edge": list(edge_endpoints(e, p.n)), "value": v.value} for e, v in moves
            ],
            "stats": solver.stats.to_doc(),
        }
    )
    return EXIT_OK


def _cmd_reply(args) -> int:
    p = _load_position(args.position, args.n, args.k)
    solver = Solver(p.n, limits=_limits(args), canonical_memo=args.canonical_memo)
    e = solver.engine_reply(p)
    value = solver.solve(p)
    _emit(
        {
            "edge": list(edge_endpoints(e, p.n)),
            "value": value.value,
            "stats": solver.stats.to_doc(),
        }
    )
    return EXIT_OK


def _cmd_status(args) -> int:
    p = _load_position(args.position, args.n, args.k)
    st = status(p)
    doc = status_to_doc(st)
    if st.is_live:
        doc["to_move"] = player_to_move(p).value
    _emit(doc)
    return EXIT_OK


def _cmd_iso(args) -> int:
    if args.first == "-" and args.second == "-":
        raise CliError("only one position may come from stdin")
    p = _load_position(args.first, args.n, args.k)
    q = _load_position(args.second, args.n, args.k)
    finder = find_color_swap_isomorphism if args.color_swap else find_isomorphism
    witness = finder(p, q)
    _emit(
        {
            "isomorphic": witness is not None,
            "color_swap": args.color_swap,
            "witness": list(witness) if witness else None,
        }
    )
    return EXIT_OK


def _cmd_canon(args) -> int:
    p = _load_position(args.position, args.n, args.k)
    _emit({"key": canonical_key(p).hex()})
    return EXIT_OK


def _cmd_orbits(args) -> int:
    p = _load_position(args.position, args.n, args.k)
    orbits = uncolored_edge_orbits(p)
    _emit({"orbits": orbits_to_doc(p, orbits)})
    return EXIT_OK


def _cmd_preset(args) -> int:
    p = build_preset(args.name, n=args.n, k=args.k)
    _emit(position_to_doc(p))
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(verify.CHECK_NAMES) if args.check == "all" else [args.check]
    for name in names:
        if name not in verify.CHECK_NAMES:
            raise CliError(
                f"unknown check {name!r}; choose from {', '.join(verify.CHECK_NAMES)} or 'all'"
            )
    reports = verify.run_checks(
        names, limits=_limits(args), n=args.n, attempt_full_solve=args.attempt_full_solve
    )
    for r in reports:
        tag = "PASS" if r.passed else ("BUDGET" if r.budget_hit else "FAIL")
        print(f"{tag:6s} {r.name} ({r.elapsed:.2f}s)", file=sys.stderr)
    _emit({"checks": [r.to_doc() for r in reports], "passed": all(r.passed for r in reports)})
    if any(r.budget_hit for r in reports):
        return EXIT_BUDGET
    if not all(r.passed for r in reports):
        return EXIT_FAIL
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "best-moves": _cmd_best_moves,
    "reply": _cmd_reply,
    "status": _cmd_status,
    "iso": _cmd_iso,
    "canon": _cmd_canon,
    "orbits": _cmd_orbits,
    "preset": _cmd_preset,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BoardTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BoardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
