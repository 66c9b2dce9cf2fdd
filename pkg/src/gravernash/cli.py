"""Command-line front end.

Every subcommand reads a JSON instance file, dispatches to the library,
and writes a single JSON run report to standard output:

    {"command": ..., "input_digest": ..., "status": ...,
     "timings_ms": {...}, "counters": {...}, "result": ...}

Exit codes: 0 success, 1 infeasible / "no" verdict / failed check,
2 usage or input error, 3 resource cap exceeded.  Result payloads are
deterministic: identical inputs give byte-identical payloads.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import serialize
from .errors import (
    GraverNashError,
    InfeasibleError,
    ResourceCapExceeded,
)
from .game import (
    best_response,
    find_equilibrium,
    aggregate_usage,
    is_feasible_profile,
    is_generalized_nash,
    provider_cost,
)
from .graver import DEFAULT_ELEMENT_CAP, graver_basis
from .inverse import solve_iiop, verify_answer
from .linalg import IntMatrix
from .nfold import build_c_matrix, build_multitype_matrix, build_nash_matrix, build_nfold
from .oracle import brute_graver, brute_ip_opt, brute_nash_check
from .serialize import frac_to_str
from .solver import solve_ip

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class _Negative(Exception):
    """Completed run whose outcome is infeasible / "no" / failed check."""

    def __init__(self, status: str, payload):
        self.status = status
        self.payload = payload


def _cmd_graver(data, cap):
    basis = graver_basis(serialize.matrix_from_json(data["D"]), cap=cap)
    return serialize.graver_to_json(basis), {"graver_size": len(basis)}


def _cmd_nfold(data, cap):
    if "types" in data:
        matrix = build_multitype_matrix(serialize.catalog_from_json(data))
    else:
        spec = serialize.nfold_spec_from_json(data)
        variant = data.get("variant", "nash")
        builders = {"plain": build_nfold, "nash": build_nash_matrix, "c": build_c_matrix}
        if variant not in builders:
            raise serialize.ValidationError(f"unknown variant {variant!r}")
        matrix = builders[variant](spec)
    return serialize.matrix_to_json(matrix), {}


def _cmd_solve(data, cap):
    inst = serialize.ip_instance_from_json(data)
    result = solve_ip(inst, cap=cap)
    counters = {
        "augmentation_count": result.augmentation_count,
        "graver_size": result.graver_size,
    }
    if result.status != "optimal":
        raise _Negative("infeasible", {"status": "infeasible"})
    payload = {
        "status": "optimal",
        "x": list(result.x),
        "objective": frac_to_str(result.objective),
    }
    return payload, counters


def _cmd_equilibrium(data, cap):
    game = serialize.game_from_json(data)
    profile = find_equilibrium(game, cap=cap)
    payload = {
        "strategies": [list(s) for s in profile.strategies],
        "usage": list(aggregate_usage(profile)),
        "provider_cost": frac_to_str(provider_cost(game, profile)),
    }
    return payload, {}


def _cmd_verify_equilibrium(data, cap):
    game = serialize.game_from_json(data["game"])
    profile = serialize.profile_from_json(data["profile"])
    if not is_feasible_profile(game, profile):
        raise _Negative("not-equilibrium", {"is_equilibrium": False, "feasible": False})
    ok = is_generalized_nash(game, profile, cap=cap)
    payload = {"is_equilibrium": ok, "feasible": True}
    if not ok:
        raise _Negative("not-equilibrium", payload)
    return payload, {}


def _cmd_best_response(data, cap):
    game = serialize.game_from_json(data["game"])
    profile = serialize.profile_from_json(data["profile"])
    player = int(data["player"])
    z = best_response(game, profile, player, cap=cap)
    return {"player": player, "strategy": list(z)}, {}


def _cmd_inverse(data, cap):
    inst = serialize.iiop_from_json(data)
    basis = graver_basis(inst.D, cap=cap)
    answer = solve_iiop(inst, basis)
    payload = serialize.answer_to_json(answer)
    counters = {"graver_size": len(basis), "feasible_shifts": len(answer.shifts)}
    if answer.verdict == "no":
        raise _Negative("no", payload)
    return payload, counters


def _cmd_verify_inverse(data, cap):
    inst = serialize.iiop_from_json(data["instance"])
    answer = serialize.answer_from_json(data["answer"])
    basis = graver_basis(inst.D, cap=cap)
    ok = verify_answer(inst, basis, answer)
    payload = {"valid": ok}
    if not ok:
        raise _Negative("invalid", payload)
    return payload, {}


def _cmd_oracle(data, cap, seed=None):
    op = data.get("op")
    if op == "random-graver":
        rng = random.Random(seed)
        rows, cols = int(data["rows"]), int(data["cols"])
        entry_bound = int(data.get("entry_bound", 2))
        matrix = IntMatrix.from_rows(
            [
                [rng.randint(-entry_bound, entry_bound) for _ in range(cols)]
                for _ in range(rows)
            ]
        )
        basis = brute_graver(matrix, int(data.get("bound", 3)), cap=cap)
        return serialize.graver_to_json(basis), {"graver_size": len(basis)}
    if op == "graver":
        basis = brute_graver(
            serialize.matrix_from_json(data["D"]), int(data["bound"]), cap=cap
        )
        return serialize.graver_to_json(basis), {"graver_size": len(basis)}
    if op == "ip":
        inst = serialize.ip_instance_from_json(data["instance"])
        value, argmins = brute_ip_opt(inst, cap=cap)
        return {
            "value": frac_to_str(value),
            "argmins": [list(p) for p in argmins],
        }, {}
    if op == "nash":
        game = serialize.game_from_json(data["game"])
        feasible, minima, equilibria = brute_nash_check(game, cap=cap)
        return {
            "feasible_count": len(feasible),
            "potential_minima": [serialize.profile_to_json(p) for p in minima],
            "equilibria": [serialize.profile_to_json(p) for p in equilibria],
        }, {}
    raise serialize.ValidationError(f"unknown oracle op {op!r}")


_COMMANDS = {
    "graver": _cmd_graver,
    "nfold": _cmd_nfold,
    "solve": _cmd_solve,
    "equilibrium": _cmd_equilibrium,
    "verify-equilibrium": _cmd_verify_equilibrium,
    "best-response": _cmd_best_response,
    "inverse": _cmd_inverse,
    "verify-inverse": _cmd_verify_inverse,
    "oracle": _cmd_oracle,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravernash",
        description="Exact equilibria and inverse costs for integer congestion games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="JSON instance file")
        p.add_argument("--output", help="write the result payload to this file")
        p.add_argument("--cap", type=int, default=None, help="override resource caps")
        p.add_argument("--seed", type=int, default=None, help="seed for generated instances")
        p.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0

    report = {"command": args.command, "status": "ok", "timings_ms": {}, "counters": {}}
    code = EXIT_OK
    payload = None
    try:
        try:
            raw = open(args.input, "rb").read()
        except OSError as exc:
            raise serialize.ValidationError(f"cannot read input: {exc}") from exc
        report["input_digest"] = hashlib.sha256(raw).hexdigest()
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise serialize.ValidationError(f"invalid JSON input: {exc}") from exc

        cap = args.cap if args.cap is not None else DEFAULT_ELEMENT_CAP
        start = time.perf_counter()
        handler = _COMMANDS[args.command]
        if args.command == "oracle":
            payload, counters = handler(data, cap, seed=args.seed)
        else:
            payload, counters = handler(data, cap)
        report["timings_ms"]["run"] = round((time.perf_counter() - start) * 1000, 3)
        report["counters"] = counters
    except _Negative as neg:
        report["status"] = neg.status
        payload = neg.payload
        code = EXIT_NEGATIVE
    except ResourceCapExceeded as exc:
        report["status"] = "cap-exceeded"
        _diag(args, str(exc))
        code = EXIT_CAP
    except (serialize.ValidationError, InfeasibleError, GraverNashError, KeyError) as exc:
        if isinstance(exc, InfeasibleError):
            report["status"] = "infeasible"
            code = EXIT_NEGATIVE
        else:
            report["status"] = "input-error"
            code = EXIT_INPUT
        _diag(args, f"{type(exc).__name__}: {exc}")

    report["result"] = payload
    text = serialize.dumps(payload) if payload is not None else "null"
    if args.output and payload is not None:
        with open(args.output, "w") as fh:
            fh.write(text)
    print(json.dumps(report, sort_keys=True))
    return code


def _diag(args, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(f"gravernash: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
