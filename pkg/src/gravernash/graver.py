"""Graver bases via a Pottier-style completion procedure.

The Graver basis of an integer matrix D is the set of nonzero elements
of ker(D) over Z that are minimal in the conformal order: none of them
splits into a sum of two nonzero sign-compatible kernel vectors.
The completion seeds a kernel lattice basis (and its negations),
repeatedly sums pairs, conformally reduces each candidate against the
current set, keeps irreducible remainders until a fixpoint, and finally
filters to the conformally minimal elements.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .errors import ResourceCapExceeded
from .linalg import (
    IntMatrix,
    IntVec,
    conformal_leq,
    is_zero,
    kernel_lattice_basis,
    one_norm,
    sign_compatible,
    vadd,
    vneg,
    vsub,
)

DEFAULT_ELEMENT_CAP = 100_000


@dataclass(frozen=True)
class GraverBasis:
    """Canonical (lexicographically sorted) Graver basis of `matrix`."""

    matrix: IntMatrix
    elements: tuple[IntVec, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def conformal_reduce(z: IntVec, basis) -> IntVec:
    """Normal form of z: subtract conformal divisors until none applies.

    Every subtraction of a nonzero g with g conformally below z strictly
    shrinks the 1-norm of z, so this terminates.
    """
    reduced = True
    while reduced and not is_zero(z):
        reduced = False
        for g in basis:
            if not is_zero(g) and conformal_leq(g, z):
                z = vsub(z, g)
                reduced = True
                break
    return z


def graver_basis(mat: IntMatrix, cap: int = DEFAULT_ELEMENT_CAP) -> GraverBasis:
    lattice = kernel_lattice_basis(mat)
    seeds = sorted({v for b in lattice for v in (b, vneg(b))})

    current: list[IntVec] = []
    seen: set[IntVec] = set()
    for s in seeds:
        r = conformal_reduce(s, current)
        if not is_zero(r) and r not in seen:
            current.append(r)
            seen.add(r)
            if len(current) > cap:
                raise ResourceCapExceeded(
                    f"Graver completion exceeded the element cap of {cap}"
                )

    # candidate sums of sign-compatible pairs reduce to zero immediately
    # (the first summand conformally divides the sum), so they are skipped;
    # the heap processes the rest by increasing 1-norm for faster closure.
    queue: list[tuple[int, IntVec]] = []
    queued: set[IntVec] = set()

    def push_sums(f: IntVec) -> None:
        for g in current:
            if sign_compatible(f, g):
                continue
            s = vadd(f, g)
            if is_zero(s) or s in queued:
                continue
            queued.add(s)
            heapq.heappush(queue, (one_norm(s), s))

    for f, g in itertools.combinations(current, 2):
        if sign_compatible(f, g):
            continue
        s = vadd(f, g)
        if not is_zero(s) and s not in queued:
            queued.add(s)
            heapq.heappush(queue, (one_norm(s), s))

    while queue:
        _, candidate = heapq.heappop(queue)
        r = conformal_reduce(candidate, current)
        if is_zero(r) or r in seen:
            continue
        current.append(r)
        seen.add(r)
        if len(current) > cap:
            raise ResourceCapExceeded(
                f"Graver completion exceeded the element cap of {cap}"
            )
        push_sums(r)

    closed = sorted(seen | {vneg(g) for g in seen})
    minimal = [
        g
        for g in closed
        if not any(h != g and conformal_leq(h, g) for h in closed if not is_zero(h))
    ]
    return GraverBasis(matrix=mat, elements=tuple(minimal))


def verify_graver_basis(basis: GraverBasis, bound: int) -> bool:
    """Cross-check against the brute-force enumeration oracle.

    Compares the elements of `basis` with max-norm <= bound to the
    exhaustive conformal-minimality computation over the same box.
    Test-facing only.
    """
    from .oracle import brute_graver  # deferred: oracle depends on GraverBasis

    from .linalg import inf_norm

    expected = set(brute_graver(basis.matrix, bound).elements)
    got = {g for g in basis.elements if inf_norm(g) <= bound}
    return got == expected
