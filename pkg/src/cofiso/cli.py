"""Command-line client for the cofiso service.

By default every command drives the service in process (no network, no
separate server needed), so output is reproducible byte for byte; pass
``--server URL`` to target a running instance instead, or use ``cofiso
serve`` to start one.

Output is one JSON object per line (``--pretty`` for humans).  Exit codes:
0 success, 2 parse error, 4 overflow, 64 unknown command, 1 anything else
(including an oracle-check that found disagreements).

Element arguments are expressions: literals like ``<+x+2|{-1,0}>`` combined
with ``*`` (left-to-right composition), postfix ``^-1`` and parentheses.
Bare isometries are written ``+x+2``; bare sets ``{0,2}`` or ``{}``.
A Unicode minus is accepted wherever ``-`` is.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

from .exprlang import ExprSyntaxError, parse_finset

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_OVERFLOW = 4
EXIT_UNKNOWN_COMMAND = 64

ERROR_EXIT_CODES = {
    "parse": EXIT_PARSE,
    "overflow": EXIT_OVERFLOW,
    "too-many-solutions": EXIT_FAILURE,
}

SEED_ENV_VAR = "COFISO_SEED"

COMMANDS = (
    "eval",
    "leq",
    "upset",
    "solve-right",
    "solve-left",
    "sigma-max",
    "sigma-eq",
    "green",
    "to-semidirect",
    "from-semidirect",
    "mc-embed",
    "mc-mul",
    "circle-demo",
    "oracle-check",
    "prop38-scan",
    "serve",
)


def _emit(obj: dict, pretty: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if pretty:
        print(json.dumps(obj, indent=2), file=stream)
    else:
        print(json.dumps(obj, separators=(",", ":")), file=stream)


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(
                f"{SEED_ENV_VAR} must be an integer, got {env!r}"
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cofiso",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of computing in process",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("eval", help="evaluate an expression to a canonical literal")
    p.add_argument("expr")

    p = sub.add_parser("leq", help="natural partial order: is E1 a restriction of E2")
    p.add_argument("e1")
    p.add_argument("e2")

    p = sub.add_parser("upset", help="all elements above E (finite)")
    p.add_argument("expr")

    for name, help_text in (
        ("solve-right", "all X with A*X == B"),
        ("solve-left", "all X with X*A == B"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("a")
        p.add_argument("b")

    p = sub.add_parser("sigma-max", help="maximum of the congruence class of E")
    p.add_argument("expr")

    p = sub.add_parser("sigma-eq", help="same unit above E1 and E2")
    p.add_argument("e1")
    p.add_argument("e2")

    p = sub.add_parser("green", help="Green's relations L, R, H, D of E1, E2")
    p.add_argument("e1")
    p.add_argument("e2")

    p = sub.add_parser("to-semidirect", help="unit and range-excluded set of E")
    p.add_argument("expr")

    p = sub.add_parser(
        "from-semidirect", help="element from unit G and range-excluded SET"
    )
    p.add_argument("gamma", metavar="G")
    p.add_argument("ran_excl", metavar="SET")

    p = sub.add_parser("mc-embed", help="domain idempotent and class maximum of E")
    p.add_argument("expr")

    p = sub.add_parser(
        "mc-mul", help="product of two (SET, G) pairs in max-coordinates"
    )
    p.add_argument("set1", metavar="SET1")
    p.add_argument("g1", metavar="G1")
    p.add_argument("set2", metavar="SET2")
    p.add_argument("g2", metavar="G2")

    p = sub.add_parser(
        "circle-demo",
        help="minimal-gap table for the circle embedding, one JSON row per line",
    )
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser(
        "oracle-check", help="differential test of closed forms vs the window oracle"
    )
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"RNG seed (default: ${SEED_ENV_VAR} or 0)",
    )

    p = sub.add_parser(
        "prop38-scan",
        help="exhaustively search for solvable equations without a unit solution",
    )
    p.add_argument("--coord-bound", type=int, default=2)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request_for(args: argparse.Namespace) -> tuple[str, dict]:
    cmd = args.command
    if cmd == "eval":
        return "/eval", {"expr": args.expr}
    if cmd == "leq":
        return "/leq", {"left": args.e1, "right": args.e2}
    if cmd == "upset":
        return "/upset", {"expr": args.expr}
    if cmd in ("solve-right", "solve-left"):
        return f"/{cmd}", {"a": args.a, "b": args.b}
    if cmd == "sigma-max":
        return "/sigma-max", {"expr": args.expr}
    if cmd == "sigma-eq":
        return "/sigma-eq", {"left": args.e1, "right": args.e2}
    if cmd == "green":
        return "/green", {"left": args.e1, "right": args.e2}
    if cmd == "to-semidirect":
        return "/to-semidirect", {"expr": args.expr}
    if cmd == "from-semidirect":
        return "/from-semidirect", {
            "gamma": args.gamma,
            "ran_excl": list(parse_finset(args.ran_excl)),
        }
    if cmd == "mc-embed":
        return "/mc-embed", {"expr": args.expr}
    if cmd == "mc-mul":
        return "/mc-mul", {
            "left": {"idem_excl": list(parse_finset(args.set1)), "t": args.g1},
            "right": {"idem_excl": list(parse_finset(args.set2)), "t": args.g2},
        }
    if cmd == "circle-demo":
        return "/circle-demo", {"max_n": args.max_n, "tol": args.tol}
    if cmd == "oracle-check":
        return "/oracle-check", {
            "samples": args.samples,
            "seed": _resolve_seed(args.seed),
            "window": args.window,
        }
    if cmd == "prop38-scan":
        return "/prop38-scan", {"coord_bound": args.coord_bound}
    raise AssertionError(f"unhandled command {cmd!r}")


async def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server is not None:
        async with httpx.AsyncClient(base_url=server, timeout=300.0) as client:
            return await client.post(path, json=payload)
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://cofiso.local"
    ) as client:
        return await client.post(path, json=payload)


def _print_response(args: argparse.Namespace, body: dict) -> int:
    if args.command == "circle-demo":
        for row in body["rows"]:
            _emit(row, args.pretty)
        return EXIT_OK
    _emit(body, args.pretty)
    if args.command == "oracle-check" and not body.get("passed", False):
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)

    head = None
    expecting_value = False
    for token in argv:
        if expecting_value:
            expecting_value = False
            continue
        if token == "--server":
            expecting_value = True
            continue
        if token.startswith("-"):
            continue
        head = token
        break
    if head is not None and head not in COMMANDS:
        _emit(
            {
                "error": "unknown-command",
                "message": f"unknown command {head!r}; expected one of: "
                + ", ".join(COMMANDS),
            },
            pretty=False,
            stream=sys.stderr,
        )
        return EXIT_UNKNOWN_COMMAND

    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_UNKNOWN_COMMAND

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        path, payload = _request_for(args)
    except ExprSyntaxError as exc:
        _emit(
            {
                "error": "parse",
                "message": exc.message,
                "line": exc.line,
                "col": exc.col,
            },
            args.pretty,
            stream=sys.stderr,
        )
        return EXIT_PARSE

    try:
        response = asyncio.run(_post(args.server, path, payload))
    except httpx.HTTPError as exc:
        _emit(
            {"error": "connection", "message": str(exc)},
            args.pretty,
            stream=sys.stderr,
        )
        return EXIT_FAILURE

    if response.status_code == 200:
        return _print_response(args, response.json())

    try:
        body = response.json()
    except ValueError:
        body = {"error": "http", "message": response.text}
    _emit(body, args.pretty, stream=sys.stderr)
    return ERROR_EXIT_CODES.get(body.get("error"), EXIT_FAILURE)


if __name__ == "__main__":
    sys.exit(main())
