"""Separable convex integer minimization by Graver-basis augmentation.

Solves min { sum_j f_j(x_j) : D x = d, 0 <= x <= u, x integer } by
computing the Graver basis of D, finding a feasible start via a phase-1
problem with artificial columns, and then greedily augmenting: at each
iteration the (direction, step) pair with the largest improvement is
applied, until no Graver step improves the objective.  Since a feasible
point is optimal exactly when no single Graver step improves it, the
terminating point is optimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .costs import ZERO_COST, AffineCost, SeparableObjective
from .errors import DimensionError, ValidationError
from .graver import DEFAULT_ELEMENT_CAP, GraverBasis, graver_basis
from .linalg import IntMatrix, IntVec, vadd, vscale


@dataclass(frozen=True)
class IpInstance:
    D: IntMatrix
    d: IntVec
    u: IntVec
    objective: SeparableObjective

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "u", tuple(self.u))
        if len(self.d) != self.D.nrows:
            raise DimensionError("right-hand side length != row count")
        if len(self.u) != self.D.ncols:
            raise DimensionError("bound vector length != column count")
        if len(self.objective) != self.D.ncols:
            raise DimensionError("objective length != column count")
        if any(b < 0 for b in self.u):
            raise ValidationError("upper bounds must be nonnegative")

    def is_feasible(self, x: IntVec) -> bool:
        return (
            len(x) == self.D.ncols
            and all(0 <= v <= b for v, b in zip(x, self.u))
            and self.D.matvec(x) == self.d
        )


@dataclass(frozen=True)
class SolveResult:
    status: str  # "optimal" or "infeasible"
    x: Optional[IntVec]
    objective: Optional[Fraction]
    augmentation_count: int
    graver_size: int


def best_step(x: IntVec, g: IntVec, inst: IpInstance) -> tuple[int, Fraction]:
    """Smallest integer step minimizing the objective along g from x.

    D g = 0 keeps the equations satisfied, so only the box limits the
    step.  The objective along the ray is convex, hence its first
    differences are nondecreasing; the smallest minimizer is the first
    step whose difference is nonnegative, found by bisection.
    Returns (step, improvement) with improvement >= 0.
    """
    lam_max = None
    for xi, gi, ui in zip(x, g, inst.u):
        if gi > 0:
            room = (ui - xi) // gi
        elif gi < 0:
            room = xi // (-gi)
        else:
            continue
        lam_max = room if lam_max is None else min(lam_max, room)
    if lam_max is None or lam_max <= 0:
        return 0, Fraction(0)

    def phi(lam: int) -> Fraction:
        return inst.objective.value(vadd(x, vscale(lam, g)))

    # first lam in [0, lam_max-1] with phi(lam+1) - phi(lam) >= 0
    lo, hi = 0, lam_max
    while lo < hi:
        mid = (lo + hi) // 2
        if phi(mid + 1) - phi(mid) >= 0:
            hi = mid
        else:
            lo = mid + 1
    step = lo
    improvement = phi(0) - phi(step)
    if improvement < 0:  # cannot happen along a convex ray
        return 0, Fraction(0)
    return step, improvement


def greedy_augment(x0: IntVec, basis: GraverBasis, inst: IpInstance) -> SolveResult:
    """Best-improvement greedy augmentation from a feasible start."""
    if not inst.is_feasible(x0):
        raise ValidationError("greedy_augment requires a feasible start")
    x = x0
    count = 0
    while True:
        best_g = None
        best_lam = 0
        best_gain = Fraction(0)
        for g in basis.elements:
            lam, gain = best_step(x, g, inst)
            if gain > best_gain:
                best_g, best_lam, best_gain = g, lam, gain
        if best_g is None:
            break
        x = vadd(x, vscale(best_lam, best_g))
        count += 1
    return SolveResult(
        status="optimal",
        x=x,
        objective=inst.objective.value(x),
        augmentation_count=count,
        graver_size=len(basis),
    )


def check_optimal(
    x: IntVec, basis: GraverBasis, inst: IpInstance
) -> tuple[bool, Optional[IntVec]]:
    """Graver optimality certificate: no single feasible step improves x.

    Returns (True, None) or (False, first violating direction in
    canonical order).
    """
    if not inst.is_feasible(x):
        raise ValidationError("check_optimal requires a feasible point")
    fx = inst.objective.value(x)
    for g in basis.elements:
        candidate = vadd(x, g)
        if inst.is_feasible(candidate) and inst.objective.value(candidate) < fx:
            return False, g
    return True, None


def find_feasible(inst: IpInstance, cap: int = DEFAULT_ELEMENT_CAP) -> Optional[IntVec]:
    """Phase 1: minimize the sum of artificial columns absorbing d.

    One artificial per row with nonzero right-hand side, entering with
    coefficient +-1 so that x = 0 plus artificials |d_i| is feasible for
    the extended system; the original instance is feasible iff the
    minimum is zero.
    """
    ncols = inst.D.ncols
    nrows = inst.D.nrows
    if all(v == 0 for v in inst.d):
        return tuple(0 for _ in range(ncols))

    hot_rows = [i for i in range(nrows) if inst.d[i] != 0]
    ext_rows = []
    for i, row in enumerate(inst.D.entries):
        art = [0] * len(hot_rows)
        if inst.d[i] != 0:
            art[hot_rows.index(i)] = 1 if inst.d[i] > 0 else -1
        ext_rows.append(tuple(row) + tuple(art))
    ext_matrix = IntMatrix(nrows, ncols + len(hot_rows), tuple(ext_rows))
    ext_u = inst.u + tuple(abs(inst.d[i]) for i in hot_rows)
    ext_obj = SeparableObjective(
        tuple([ZERO_COST] * ncols + [AffineCost(Fraction(1), Fraction(0))] * len(hot_rows))
    )
    ext_inst = IpInstance(ext_matrix, inst.d, ext_u, ext_obj)
    start = tuple([0] * ncols + [abs(inst.d[i]) for i in hot_rows])
    basis = graver_basis(ext_matrix, cap=cap)
    result = greedy_augment(start, basis, ext_inst)
    if result.objective != 0:
        return None
    assert result.x is not None
    return result.x[:ncols]


def solve_ip(inst: IpInstance, cap: int = DEFAULT_ELEMENT_CAP) -> SolveResult:
    basis = graver_basis(inst.D, cap=cap)
    x0 = find_feasible(inst, cap=cap)
    if x0 is None:
        return SolveResult(
            status="infeasible",
            x=None,
            objective=None,
            augmentation_count=0,
            graver_size=len(basis),
        )
    return greedy_augment(x0, basis, inst)
