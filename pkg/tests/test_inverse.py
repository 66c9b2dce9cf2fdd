import random
from fractions import Fraction

import pytest

from gravernash import (
    IiopAnswer,
    IiopInstance,
    IntMatrix,
    IpInstance,
    ValidationError,
    brute_ip_opt,
    feasible_shifts,
    graver_basis,
    solve_iiop,
    verify_answer,
    weighted_objective,
)
from gravernash.costs import QuadraticCost, SeparableObjective

from conftest import rand_matrix, square_cost

F = Fraction

D11 = IntMatrix.from_rows([[1, 1]])


def shifted_square(center: int) -> QuadraticCost:
    # (y - center)^2, convex and minimized at the center
    return QuadraticCost(F(1), F(-2 * center), F(center * center))


def test_yes_instance_example():
    # x* = (1, 1) on x1 + x2 = 2 with shapes (y-1)^2 each: any weights work
    inst = IiopInstance(
        D=D11,
        d=(2,),
        u=(2, 2),
        xstar=(1, 1),
        shapes=SeparableObjective((shifted_square(1), shifted_square(1))),
    )
    basis = graver_basis(D11)
    answer = solve_iiop(inst, basis)
    assert answer.verdict == "yes"
    assert answer.lam is not None
    assert sum(answer.lam) == 1
    assert verify_answer(inst, basis, answer)


def test_yes_instance_needs_skewed_weights():
    # x* = (2, 0): squares alone prefer (1, 1), but weights can tilt the
    # objective so the corner becomes optimal
    inst = IiopInstance(
        D=D11,
        d=(2,),
        u=(2, 2),
        xstar=(2, 0),
        shapes=SeparableObjective((shifted_square(2), square_cost())),
    )
    basis = graver_basis(D11)
    answer = solve_iiop(inst, basis)
    assert answer.verdict == "yes"
    assert verify_answer(inst, basis, answer)
    weighted = IpInstance(inst.D, inst.d, inst.u, weighted_objective(inst, answer.lam))
    value, argmins = brute_ip_opt(weighted)
    assert weighted.objective.value(inst.xstar) == value


def test_no_instance_example():
    # both shapes strictly prefer moving off x* in the same direction
    inst = IiopInstance(
        D=D11,
        d=(2,),
        u=(2, 2),
        xstar=(1, 1),
        shapes=SeparableObjective((shifted_square(2), square_cost())),
    )
    basis = graver_basis(D11)
    answer = solve_iiop(inst, basis)
    assert answer.verdict == "no"
    assert answer.certificate is not None
    assert verify_answer(inst, basis, answer)


def test_no_shifts_means_uniform_yes():
    eye = IntMatrix.identity(2)
    inst = IiopInstance(
        D=eye,
        d=(1, 1),
        u=(1, 1),
        xstar=(1, 1),
        shapes=SeparableObjective((square_cost(), square_cost())),
    )
    basis = graver_basis(eye)
    answer = solve_iiop(inst, basis)
    assert answer.verdict == "yes"
    assert answer.lam == (F(1, 2), F(1, 2))
    assert answer.shifts == ()
    assert verify_answer(inst, basis, answer)


def test_feasible_shifts_respect_box():
    basis = graver_basis(D11)
    inst = IiopInstance(
        D=D11,
        d=(2,),
        u=(2, 2),
        xstar=(2, 0),
        shapes=SeparableObjective((square_cost(), square_cost())),
    )
    assert feasible_shifts(basis, inst) == [(-1, 1)]


def test_xstar_outside_polytope_rejected():
    with pytest.raises(ValidationError):
        IiopInstance(
            D=D11,
            d=(2,),
            u=(2, 2),
            xstar=(2, 1),
            shapes=SeparableObjective((square_cost(), square_cost())),
        )


def test_verify_rejects_tampered_answers():
    inst = IiopInstance(
        D=D11,
        d=(2,),
        u=(2, 2),
        xstar=(1, 1),
        shapes=SeparableObjective((shifted_square(1), shifted_square(1))),
    )
    basis = graver_basis(D11)
    good = solve_iiop(inst, basis)
    assert verify_answer(inst, basis, good)
    negative = IiopAnswer(verdict="yes", lam=(F(2), F(-1)), shifts=good.shifts)
    assert not verify_answer(inst, basis, negative)
    unnormalized = IiopAnswer(verdict="yes", lam=(F(1), F(1)), shifts=good.shifts)
    assert not verify_answer(inst, basis, unnormalized)
    bogus_no = IiopAnswer(
        verdict="no", shifts=good.shifts, certificate=(F(1),) * len(good.shifts)
    )
    assert not verify_answer(inst, basis, bogus_no)
    assert not verify_answer(inst, basis, IiopAnswer(verdict="maybe"))


def no_family_instance(n: int) -> IiopInstance:
    """A refutable instance for every n >= 2.

    Coordinates 1-2 form the conflicted pair; every extra coordinate is
    unconstrained with a shape that strictly rewards moving off x*.
    """
    row = [1, 1] + [0] * (n - 2)
    u = (2,) * n
    xstar = (1, 1) + (0,) * (n - 2)
    shapes = [shifted_square(2), square_cost()] + [shifted_square(2)] * (n - 2)
    return IiopInstance(
        D=IntMatrix.from_rows([row]), d=(2,), u=u, xstar=xstar,
        shapes=SeparableObjective(tuple(shapes)),
    )


def test_no_family_scales():
    for n in range(2, 5):
        inst = no_family_instance(n)
        basis = graver_basis(inst.D)
        answer = solve_iiop(inst, basis)
        assert answer.verdict == "no"
        assert verify_answer(inst, basis, answer)


def test_planted_yes_instances_random():
    rng = random.Random(31)
    produced = 0
    while produced < 25:
        n = rng.randint(1, 3)
        mat = rand_matrix(rng, 1, n, -2, 2)
        u = tuple(rng.randint(1, 3) for _ in range(n))
        lam0 = tuple(F(rng.randint(1, 4)) for _ in range(n))
        centers = tuple(rng.randint(0, ui) for ui in u)
        shapes = SeparableObjective(tuple(shifted_square(c) for c in centers))
        witness = tuple(rng.randint(0, ui) for ui in u)
        planted = IpInstance(
            mat,
            mat.matvec(witness),
            u,
            SeparableObjective(
                tuple(
                    QuadraticCost(w * F(1), w * F(-2 * c), w * F(c * c))
                    for w, c in zip(lam0, centers)
                )
            ),
        )
        _, argmins = brute_ip_opt(planted)
        xstar = argmins[0]
        inst = IiopInstance(D=mat, d=planted.d, u=u, xstar=xstar, shapes=shapes)
        basis = graver_basis(mat)
        answer = solve_iiop(inst, basis)
        assert answer.verdict == "yes"
        assert verify_answer(inst, basis, answer)
        produced += 1
