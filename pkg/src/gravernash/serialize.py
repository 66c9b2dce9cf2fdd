"""JSON encoding and decoding for all public data types.

Rationals travel as strings "p/q" (or "p") so that no precision is ever
lost to JSON numbers.  Serialization is deterministic: keys are sorted
and collections keep their canonical order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .costs import (
    AffineCost,
    PiecewiseLinearCost,
    PowerCost,
    QuadraticCost,
    SeparableObjective,
    UnivariateCost,
)
from .errors import ValidationError
from .game import GameInstance, PlayerSpec, StrategyProfile
from .graver import GraverBasis
from .inverse import IiopAnswer, IiopInstance
from .linalg import IntMatrix, RatVec, vec
from .nfold import NfoldSpec, TypeCatalog
from .solver import IpInstance


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_from_str(s: Any) -> Fraction:
    if isinstance(s, bool):
        raise ValidationError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational: {s!r}") from exc
    raise ValidationError(f"not a rational: {s!r}")


def matrix_to_json(m: IntMatrix) -> dict:
    return {"rows": m.nrows, "cols": m.ncols, "entries": m.to_lists()}


def matrix_from_json(obj: Any) -> IntMatrix:
    if isinstance(obj, list):
        if obj and not isinstance(obj[0], list):
            raise ValidationError("matrix must be a list of rows")
        if not obj:
            raise ValidationError("matrix without explicit dimensions must be nonempty")
        return IntMatrix.from_rows(obj)
    if isinstance(obj, dict):
        return IntMatrix.from_rows(obj["entries"], ncols=obj["cols"])
    raise ValidationError("matrix must be a list of rows or a dict")


def ratvec_to_json(v: RatVec) -> list[str]:
    return [frac_to_str(x) for x in v]


def ratvec_from_json(obj: Any) -> RatVec:
    return tuple(frac_from_str(x) for x in obj)


def cost_to_json(c: UnivariateCost) -> dict:
    if isinstance(c, AffineCost):
        return {"kind": "affine", "a": frac_to_str(c.a), "b": frac_to_str(c.b)}
    if isinstance(c, QuadraticCost):
        return {
            "kind": "quadratic",
            "a": frac_to_str(c.a),
            "b": frac_to_str(c.b),
            "c": frac_to_str(c.c),
        }
    if isinstance(c, PowerCost):
        return {"kind": "power", "a": frac_to_str(c.a), "k": c.k}
    if isinstance(c, PiecewiseLinearCost):
        return {
            "kind": "piecewise_linear",
            "breakpoints": list(c.breakpoints),
            "slopes": ratvec_to_json(c.slopes),
            "c0": frac_to_str(c.c0),
        }
    raise ValidationError(f"cost kind {c.kind!r} has no JSON form")


def cost_from_json(obj: Any) -> UnivariateCost:
    try:
        kind = obj["kind"]
        if kind == "affine":
            return AffineCost(frac_from_str(obj["a"]), frac_from_str(obj["b"]))
        if kind == "quadratic":
            return QuadraticCost(
                frac_from_str(obj["a"]), frac_from_str(obj["b"]), frac_from_str(obj["c"])
            )
        if kind == "power":
            return PowerCost(frac_from_str(obj["a"]), int(obj["k"]))
        if kind == "piecewise_linear":
            return PiecewiseLinearCost(
                breakpoints=tuple(int(b) for b in obj["breakpoints"]),
                slopes=ratvec_from_json(obj["slopes"]),
                c0=frac_from_str(obj["c0"]),
            )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed cost spec: {obj!r}") from exc
    raise ValidationError(f"unknown cost kind: {obj.get('kind')!r}")


def objective_to_json(f: SeparableObjective) -> list[dict]:
    return [cost_to_json(c) for c in f.terms]


def objective_from_json(obj: Any) -> SeparableObjective:
    return SeparableObjective(tuple(cost_from_json(c) for c in obj))


def graver_to_json(basis: GraverBasis) -> dict:
    return {
        "matrix": basis.matrix.to_lists(),
        "elements": [list(g) for g in basis.elements],
    }


def graver_from_json(obj: Any) -> GraverBasis:
    return GraverBasis(
        matrix=matrix_from_json(obj["matrix"]),
        elements=tuple(vec(g) for g in obj["elements"]),
    )


def nfold_spec_from_json(obj: Any) -> NfoldSpec:
    return NfoldSpec(
        A=matrix_from_json(obj["A"]), B=matrix_from_json(obj["B"]), N=int(obj["N"])
    )


def catalog_from_json(obj: Any) -> TypeCatalog:
    return TypeCatalog(
        types=tuple(
            (matrix_from_json(t["A"]), matrix_from_json(t["B"])) for t in obj["types"]
        ),
        assignment=tuple(int(i) for i in obj["assignment"]),
    )


def ip_instance_to_json(inst: IpInstance) -> dict:
    return {
        "D": inst.D.to_lists(),
        "d": list(inst.d),
        "u": list(inst.u),
        "objective": objective_to_json(inst.objective),
    }


def ip_instance_from_json(obj: Any) -> IpInstance:
    return IpInstance(
        D=matrix_from_json(obj["D"]),
        d=vec(obj["d"]),
        u=vec(obj["u"]),
        objective=objective_from_json(obj["objective"]),
    )


def player_to_json(p: PlayerSpec) -> dict:
    return {
        "A": p.A.to_lists(),
        "b": list(p.b),
        "u": list(p.u),
        "B": p.B.to_lists(),
    }


def player_from_json(obj: Any) -> PlayerSpec:
    return PlayerSpec(
        A=matrix_from_json(obj["A"]),
        b=vec(obj["b"]),
        u=vec(obj["u"]),
        B=matrix_from_json(obj["B"]),
    )


def game_to_json(game: GameInstance) -> dict:
    return {
        "players": [player_to_json(p) for p in game.players],
        "b0": list(game.b0),
        "costs": objective_to_json(game.costs),
    }


def game_from_json(obj: Any) -> GameInstance:
    return GameInstance(
        players=tuple(player_from_json(p) for p in obj["players"]),
        b0=vec(obj["b0"]),
        costs=objective_from_json(obj["costs"]),
    )


def profile_to_json(profile: StrategyProfile) -> dict:
    return {"strategies": [list(s) for s in profile.strategies]}


def profile_from_json(obj: Any) -> StrategyProfile:
    return StrategyProfile(strategies=tuple(vec(s) for s in obj["strategies"]))


def iiop_to_json(inst: IiopInstance) -> dict:
    return {
        "D": inst.D.to_lists(),
        "d": list(inst.d),
        "u": list(inst.u),
        "xstar": list(inst.xstar),
        "shapes": objective_to_json(inst.shapes),
    }


def iiop_from_json(obj: Any) -> IiopInstance:
    return IiopInstance(
        D=matrix_from_json(obj["D"]),
        d=vec(obj["d"]),
        u=vec(obj["u"]),
        xstar=vec(obj["xstar"]),
        shapes=objective_from_json(obj["shapes"]),
    )


def answer_to_json(answer: IiopAnswer) -> dict:
    out: dict = {"verdict": answer.verdict}
    if answer.lam is not None:
        out["lambda"] = ratvec_to_json(answer.lam)
    if answer.certificate is not None:
        out["certificate"] = [
            [frac_to_str(v), list(g)] for v, g in zip(answer.certificate, answer.shifts)
        ]
    return out


def answer_from_json(obj: Any) -> IiopAnswer:
    verdict = obj["verdict"]
    lam = ratvec_from_json(obj["lambda"]) if "lambda" in obj else None
    certificate = None
    shifts: tuple = ()
    if "certificate" in obj:
        certificate = tuple(frac_from_str(pair[0]) for pair in obj["certificate"])
        shifts = tuple(vec(pair[1]) for pair in obj["certificate"])
    return IiopAnswer(verdict=verdict, lam=lam, shifts=shifts, certificate=certificate)


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
