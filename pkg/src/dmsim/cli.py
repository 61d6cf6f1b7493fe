"""Command-line client for the simulation service.

Each subcommand builds the same pydantic request the HTTP endpoint accepts
and, by default, runs the handler in-process; ``--server URL`` sends the
request to a running service instead.  Output is a JSON document with the
command, parameters, seed, and results, printed with sorted keys so the same
invocation always produces byte-identical bytes.

Exit codes: 0 on success, 1 on algorithm failure (a Shor invocation whose
runs all failed), 2 on usage errors.

The default seed is 0; the QDM_SEED environment variable overrides it and an
explicit ``--seed`` wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from pydantic import BaseModel, ValidationError

from . import __version__
from .service import handlers
from .service.models import (
    BellRequest,
    ClusterCnotRequest,
    ClusterTransportRequest,
    EntropyRequest,
    FidelityRequest,
    GhzRequest,
    GroverRequest,
    PtraceCheckRequest,
    RunOutput,
    ShorRequest,
    TeleportRequest,
    WernerRequest,
)

# subcommand -> (request handler, HTTP route)
_COMMANDS = {
    "bell": (handlers.run_bell, "/bell"),
    "ghz": (handlers.run_ghz, "/ghz"),
    "werner": (handlers.run_werner, "/werner"),
    "teleport": (handlers.run_teleport, "/teleport"),
    "grover": (handlers.run_grover, "/grover"),
    "shor": (handlers.run_shor, "/shor"),
    "cluster-transport": (handlers.run_cluster_transport, "/cluster/transport"),
    "cluster-cnot": (handlers.run_cluster_cnot, "/cluster/cnot"),
    "ptrace-check": (handlers.run_ptrace_check, "/ptrace-check"),
    "entropy": (handlers.run_entropy, "/entropy"),
    "fidelity": (handlers.run_fidelity, "/fidelity"),
}


def _default_seed() -> int:
    env = os.environ.get("QDM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"QDM_SEED must be an integer, got {env!r}")
    return 0


def _bits(text: str) -> list[int]:
    if not text or any(c not in "01" for c in text):
        raise argparse.ArgumentTypeError(f"expected a bit string, got {text!r}")
    return [int(c) for c in text]


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="RNG seed (default: QDM_SEED or 0)")
    parser.add_argument("--output", default=None, help="write JSON here instead of stdout")
    parser.add_argument("--server", default=None, help="send the request to a running service URL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmsim", description="Density-matrix quantum computer simulator"
    )
    parser.add_argument("--version", action="version", version=f"dmsim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bell", help="Bell state diagnostics")
    p.add_argument("--a", type=int, choices=(0, 1), default=0)
    p.add_argument("--b", type=int, choices=(0, 1), default=0)
    _add_common(p)

    p = sub.add_parser("ghz", help="GHZ state diagnostics")
    p.add_argument("--a", type=int, choices=(0, 1), default=0)
    p.add_argument("--b", type=int, choices=(0, 1), default=0)
    p.add_argument("--c", type=int, choices=(0, 1), default=0)
    _add_common(p)

    p = sub.add_parser("werner", help="Werner state diagnostics")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--a", type=int, choices=(0, 1), default=0)
    p.add_argument("--b", type=int, choices=(0, 1), default=0)
    _add_common(p)

    p = sub.add_parser("teleport", help="teleportation branch enumeration")
    p.add_argument("variant", choices=("one", "bell", "two"))
    p.add_argument("--branch", type=_bits, default=None, help="forced outcome bits, e.g. 01")
    p.add_argument("--a", type=int, choices=(0, 1), default=0, help="Bell input label a")
    p.add_argument("--b", type=int, choices=(0, 1), default=0, help="Bell input label b")
    _add_common(p)

    p = sub.add_parser("grover", help="Grover search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--marked", type=_int_list, required=True, help="comma-separated indices")
    p.add_argument("--iters", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("shor", help="Shor factoring runs")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--method", choices=("density", "statevector", "dft"), default="dft")
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--n1", type=int, default=None)
    p.add_argument("--n2", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("cluster", help="cluster-model demos")
    csub = p.add_subparsers(dest="cluster_command", required=True)
    pt = csub.add_parser("transport", help="one-qubit transport")
    pt.add_argument("--branch", type=int, choices=(0, 1), default=None)
    _add_common(pt)
    pc = csub.add_parser("cnot", help="cluster CNOT")
    pc.add_argument("--branch", type=_bits, default=None, help="forced bits, e.g. 10")
    _add_common(pc)

    p = sub.add_parser("ptrace-check", help="partial-trace oracle cross-check")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    _add_common(p)

    p = sub.add_parser("entropy", help="entropy/purity of a state")
    p.add_argument("--state", default=None, help="named state, e.g. bell:00 or werner:0.5")
    p.add_argument("--file", default=None, help="density-matrix JSON file")
    _add_common(p)

    p = sub.add_parser("fidelity", help="fidelity of two states")
    p.add_argument("--state1", default=None)
    p.add_argument("--file1", default=None)
    p.add_argument("--state2", default=None)
    p.add_argument("--file2", default=None)
    _add_common(p)

    return parser


def _state_input(spec: str | None, path: str | None) -> dict:
    if (spec is None) == (path is None):
        raise SystemExit("provide exactly one of --state/--file")
    if spec is not None:
        return {"spec": spec}
    with open(path) as fh:
        return {"matrix": json.load(fh)}


def _build_request(args: argparse.Namespace, seed: int) -> tuple[str, BaseModel]:
    cmd = args.command
    if cmd == "bell":
        return cmd, BellRequest(a=args.a, b=args.b, seed=seed)
    if cmd == "ghz":
        return cmd, GhzRequest(a=args.a, b=args.b, c=args.c, seed=seed)
    if cmd == "werner":
        return cmd, WernerRequest(lam=args.lam, a=args.a, b=args.b, seed=seed)
    if cmd == "teleport":
        return cmd, TeleportRequest(
            variant=args.variant, branch=args.branch, a=args.a, b=args.b, seed=seed
        )
    if cmd == "grover":
        return cmd, GroverRequest(n=args.n, marked=args.marked, iters=args.iters, seed=seed)
    if cmd == "shor":
        return cmd, ShorRequest(
            N=args.N, x=args.x, method=args.method, runs=args.runs,
            n1=args.n1, n2=args.n2, seed=seed,
        )
    if cmd == "cluster":
        if args.cluster_command == "transport":
            return "cluster-transport", ClusterTransportRequest(seed=seed, branch=args.branch)
        return "cluster-cnot", ClusterCnotRequest(seed=seed, branches=args.branch)
    if cmd == "ptrace-check":
        return cmd, PtraceCheckRequest(n=args.n, trials=args.trials, seed=seed)
    if cmd == "entropy":
        return cmd, EntropyRequest(state=_state_input(args.state, args.file), seed=seed)
    if cmd == "fidelity":
        return cmd, FidelityRequest(
            state1=_state_input(args.state1, args.file1),
            state2=_state_input(args.state2, args.file2),
            seed=seed,
        )
    raise SystemExit(f"unknown command {cmd!r}")


def _dispatch(command: str, request: BaseModel, server: str | None) -> RunOutput:
    handler, route = _COMMANDS[command]
    if server is None:
        return handler(request)
    import httpx

    response = httpx.post(
        server.rstrip("/") + route, json=request.model_dump(by_alias=True), timeout=300.0
    )
    response.raise_for_status()
    return RunOutput.model_validate(response.json())


def _render(output: RunOutput) -> str:
    return json.dumps(output.model_dump(), indent=2, sort_keys=True)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        command, request = _build_request(args, seed)
        output = _dispatch(command, request, args.server)
    except (ValueError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = _render(output)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if command == "shor" and output.results.get("success_fraction") == 0:
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
