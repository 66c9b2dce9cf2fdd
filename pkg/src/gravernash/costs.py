"""Univariate convex, monotonously increasing cost functions.

Four closed-form parametric families cover the public surface (affine,
quadratic, power, piecewise linear); evaluation is exact rational at
nonnegative integer arguments.  Shifted and scaled wrappers exist for
internal use (best responses shift by the other players' usage, inverse
weights scale the fixed shapes) and preserve convexity and exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, ValidationError
from .linalg import IntVec

DEFAULT_PROBE_RANGE = 100


def _check_arg(y: int) -> None:
    if y < 0:
        raise ValidationError(f"cost functions are defined on y >= 0, got {y}")


@dataclass(frozen=True)
class AffineCost:
    """a*y + b."""

    a: Fraction
    b: Fraction
    kind = "affine"

    def value(self, y: int) -> Fraction:
        _check_arg(y)
        return self.a * y + self.b

    def params_ok(self) -> bool:
        return self.a >= 0 and self.b >= 0


@dataclass(frozen=True)
class QuadraticCost:
    """a*y^2 + b*y + c."""

    a: Fraction
    b: Fraction
    c: Fraction
    kind = "quadratic"

    def value(self, y: int) -> Fraction:
        _check_arg(y)
        return self.a * y * y + self.b * y + self.c

    def params_ok(self) -> bool:
        return self.a >= 0 and self.b >= 0 and self.c >= 0


@dataclass(frozen=True)
class PowerCost:
    """a*y^k with integer exponent k >= 1."""

    a: Fraction
    k: int
    kind = "power"

    def value(self, y: int) -> Fraction:
        _check_arg(y)
        return self.a * Fraction(y) ** self.k

    def params_ok(self) -> bool:
        return self.a >= 0 and isinstance(self.k, int) and self.k >= 1


@dataclass(frozen=True)
class PiecewiseLinearCost:
    """Integral of a nondecreasing nonnegative step function of slopes.

    Slope slopes[i] applies between breakpoints[i-1] and breakpoints[i]
    (with implicit endpoints 0 and infinity); c0 is the value at 0.
    """

    breakpoints: tuple[int, ...]
    slopes: tuple[Fraction, ...]
    c0: Fraction
    kind = "piecewise_linear"

    def value(self, y: int) -> Fraction:
        _check_arg(y)
        total = self.c0
        prev = 0
        for bp, slope in zip(self.breakpoints, self.slopes):
            if y <= bp:
                return total + slope * (y - prev)
            total += slope * (bp - prev)
            prev = bp
        return total + self.slopes[-1] * (y - prev)

    def params_ok(self) -> bool:
        if len(self.slopes) != len(self.breakpoints) + 1:
            return False
        if any(s < 0 for s in self.slopes):
            return False
        if list(self.slopes) != sorted(self.slopes):
            return False
        if any(bp <= 0 for bp in self.breakpoints):
            return False
        return list(self.breakpoints) == sorted(set(self.breakpoints))


@dataclass(frozen=True)
class ShiftedCost:
    """base(y + shift); used for best responses against fixed rivals."""

    base: "UnivariateCost"
    shift: int
    kind = "shifted"

    def value(self, y: int) -> Fraction:
        _check_arg(y)
        return self.base.value(y + self.shift)

    def params_ok(self) -> bool:
        return self.shift >= 0 and self.base.params_ok()


@dataclass(frozen=True)
class ScaledCost:
    """factor * base(y) with factor >= 0; used for weighted shapes."""

    base: "UnivariateCost"
    factor: Fraction
    kind = "scaled"

    def value(self, y: int) -> Fraction:
        _check_arg(y)
        return self.factor * self.base.value(y)

    def params_ok(self) -> bool:
        return self.factor >= 0 and self.base.params_ok()


UnivariateCost = (
    AffineCost | QuadraticCost | PowerCost | PiecewiseLinearCost | ShiftedCost | ScaledCost
)

ZERO_COST = AffineCost(Fraction(0), Fraction(0))


def eval_cost(cost: UnivariateCost, y: int) -> Fraction:
    return cost.value(y)


def validate(cost: UnivariateCost, probe_range: int = DEFAULT_PROBE_RANGE) -> bool:
    """Parameter constraints plus a finite convexity/monotonicity probe.

    The parametric constraints already imply convex monotone growth; the
    probe over 0..probe_range re-checks the first differences as a
    defense in depth.
    """
    if not cost.params_ok():
        return False
    values = [cost.value(y) for y in range(probe_range + 2)]
    diffs = [b - a for a, b in zip(values, values[1:])]
    if any(d < 0 for d in diffs):
        return False
    return all(d2 >= d1 for d1, d2 in zip(diffs, diffs[1:]))


@dataclass(frozen=True)
class SeparableObjective:
    terms: tuple[UnivariateCost, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def value(self, x: Sequence[int]) -> Fraction:
        if len(x) != len(self.terms):
            raise DimensionError(
                f"objective has {len(self.terms)} terms but x has {len(x)} entries"
            )
        return sum((t.value(v) for t, v in zip(self.terms, x)), Fraction(0))


def eval_objective(objective: SeparableObjective, x: IntVec) -> Fraction:
    return objective.value(x)
