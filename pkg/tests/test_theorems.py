import random

import pytest

from clifflame.checks import (
    counterexample_data,
    example_data,
    random_harmonic_scalar,
    random_params,
    random_solution,
)
from clifflame.errors import NotASolution, NotVectorValued, PreconditionViolated
from clifflame.expr import parse_field
from clifflame.fields import MVField, conjugate_field
from clifflame.operators import (
    STANDARD,
    bi_dirac,
    lame_phi_psi,
    laplacian,
    left_dirac,
    params_from,
    random_structural_set,
    right_dirac,
    sandwich,
)
from clifflame.search import ansatz_basis, kernel_fields, random_combination
from clifflame.theorems import (
    check_lemma2,
    check_prop2,
    conjugate_harmonic_t8,
    conjugate_infra_t7,
    construct_w_t5,
    construct_w_t6,
    decompose_t1,
    decompose_t2,
    decompose_t3,
    g_pair,
    t7_hypotheses,
    t8_hypotheses,
    verify_decomposition_t4,
)

F = parse_field
P = params_from(alpha="1/10", beta="1/5")
ZERO = MVField.zero()


def _assert_decomposition(dec, u, phi, psi):
    assert dec.h + dec.i == u
    for name, r in dec.residuals(phi, psi).items():
        assert not r, name


def test_t1_on_constructed_solution():
    w = construct_w_t5(P, STANDARD, STANDARD, F("x1*x2*x3"))
    dec = decompose_t1(P, STANDARD, w)
    _assert_decomposition(dec, w, STANDARD, STANDARD)
    assert not laplacian(dec.h)
    assert not sandwich(STANDARD, dec.i, STANDARD)


def test_t1_linear_field():
    rng = random.Random(1)
    for _ in range(5):
        psi = random_structural_set(rng)
        u = F("x1*e2")
        _assert_decomposition(decompose_t1(P, psi, u), u, psi, psi)


def test_t1_random_solutions():
    rng = random.Random(2)
    for k in range(10):
        p = random_params(rng)
        psi = random_structural_set(rng)
        u = random_solution(rng, p, psi, psi, via="t6" if k % 2 else "t5")
        dec = decompose_t1(p, psi, u)
        _assert_decomposition(dec, u, psi, psi)
        assert dec.h.is_vector_valued() and dec.i.is_vector_valued()


def test_t1_rejects_non_solutions():
    with pytest.raises(NotASolution):
        decompose_t1(P, STANDARD, F("x1^2*e1"))
    with pytest.raises(NotVectorValued):
        decompose_t1(P, STANDARD, F("x1*e12"))


def test_t2_examples():
    _, phi, psi, _ = example_data()
    dec = decompose_t2(P, phi, psi, ZERO)
    assert not dec.h and not dec.i
    u = F("x1*e2 - 3*x3*e1 + e3")
    _assert_decomposition(decompose_t2(P, phi, psi, u), u, phi, psi)
    with pytest.raises(PreconditionViolated) as exc:
        decompose_t2(P, phi, psi, F("x1^2*e1"))
    assert exc.value.hypothesis == "harmonic"


def test_t2_requires_psi_psi_inframonogenic():
    # the worked example solves its system and is harmonic, but psi-D u psi-D = 10 e2
    p, phi, psi, u = example_data()
    with pytest.raises(PreconditionViolated) as exc:
        decompose_t2(p, phi, psi, u)
    assert exc.value.hypothesis == "(psi,psi)-inframonogenic"


def test_t2_t3_on_random_solutions():
    rng = random.Random(3)
    for _ in range(8):
        p = random_params(rng)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        u = random_solution(rng, p, phi, psi, via="t5")
        _assert_decomposition(decompose_t2(p, phi, psi, u), u, phi, psi)
        _assert_decomposition(decompose_t3(p, phi, psi, u), u, phi, psi)


def test_t3_worked_example_components():
    p, phi, psi, u = example_data()
    dec = decompose_t3(p, phi, psi, u)
    assert dec.scale_factor == F("-9/20").comps[0].terms[(0, 0, 0)]
    assert dec.h.grade(1).comps[1] == F("-7/3*x1*x2 + 1/3*x1").comps[0]
    assert dec.i.grade(1).comps[1] == F("20/9*(3/2*x2 - 3/20)*x1").comps[0]
    assert dec.h.grade(3) == F("5*x1*x3*e123")
    assert dec.i.grade(3) == F("-5*x1*x3*e123")
    assert not decompose_t3(p, phi, psi, ZERO).h


def test_t4_reports():
    p, phi, psi, u = example_data()
    dec = decompose_t3(p, phi, psi, u)
    rep = verify_decomposition_t4(p, phi, psi, u, dec.h, dec.i)
    assert rep.passed
    # the (psi,psi)-inframonogenic hypothesis does not hold for this u
    assert not rep.hypotheses_hold
    assert verify_decomposition_t4(p, phi, psi, ZERO, ZERO, ZERO).passed
    bad = verify_decomposition_t4(p, phi, psi, u, dec.h + F("x1^2*e1"), dec.i)
    assert not bad.passed
    failing = [r.name for r in bad.conclusion_residuals if not r.zero]
    assert "h in H(phi,psi)" in failing
    assert "x1^2" in bad.summary() or "x1" in bad.summary()
    assert bad.to_json()["pass"] is False


def test_t5_examples():
    w = construct_w_t5(P, STANDARD, STANDARD, F("x1*x2*x3"))
    assert w == -F("x2*x3*e1 + x1*x3*e2 + x1*x2*e3")
    assert construct_w_t5(P, STANDARD, STANDARD, F("1")) == ZERO
    g, phi, psi = counterexample_data()
    w = construct_w_t5(P, phi, psi, g)
    assert not lame_phi_psi(P, phi, psi, w)
    with pytest.raises(PreconditionViolated):
        construct_w_t5(P, STANDARD, STANDARD, F("x1^2"))


def test_t6_examples():
    rng = random.Random(4)
    for _ in range(5):
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        u = random_harmonic_scalar(rng)
        w = construct_w_t6(P, phi, psi, u)
        assert w == right_dirac(u, psi).scale(1 - P.alpha / P.beta)
        assert not lame_phi_psi(P, phi, psi, w)
    assert construct_w_t6(P, STANDARD, STANDARD, ZERO) == ZERO
    # linear pieces lie in every kernel
    u = F("x1*e1 + 2*x2*e13 - x3")
    assert not lame_phi_psi(P, STANDARD, STANDARD, construct_w_t6(P, STANDARD, STANDARD, u))
    with pytest.raises(PreconditionViolated):
        construct_w_t6(P, STANDARD, STANDARD, F("x1^2*e1"))


def _hypothesis_space(hyps, phi, psi):
    return kernel_fields([lambda f, j=j: hyps(phi, psi, f)[j].field for j in range(3)], ansatz_basis(2))


def test_t7_t8_on_searched_fields():
    rng = random.Random(5)
    for _ in range(4):
        p = random_params(rng)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        h_space = _hypothesis_space(t7_hypotheses, phi, psi)
        i_space = _hypothesis_space(t8_hypotheses, phi, psi)
        assert h_space and i_space
        assert any(f.degree() == 2 for f in h_space)
        for h in h_space[:4] + [random_combination(rng, h_space)]:
            i = conjugate_infra_t7(p, phi, psi, h)
            assert not sandwich(phi, i, psi)
            assert not lame_phi_psi(p, phi, psi, h + i)
        for i in i_space[:4] + [random_combination(rng, i_space)]:
            h = conjugate_harmonic_t8(p, phi, psi, i)
            assert not bi_dirac(phi, psi, h)
            assert not lame_phi_psi(p, phi, psi, h + i)


def test_t7_t8_trivial_and_rejected():
    assert conjugate_infra_t7(P, STANDARD, STANDARD, ZERO) == ZERO
    assert conjugate_harmonic_t8(P, STANDARD, STANDARD, ZERO) == ZERO
    # psi-D h = -1 and nu(-1) = 3, so the omega hypothesis fails by 2
    with pytest.raises(PreconditionViolated) as exc:
        conjugate_infra_t7(P, STANDARD, STANDARD, F("x1*e1"))
    assert exc.value.residual == F("2")
    h = conjugate_harmonic_t8(P, STANDARD, STANDARD, F("x3*e3"))
    assert not bi_dirac(STANDARD, STANDARD, h)
    with pytest.raises(PreconditionViolated):
        conjugate_harmonic_t8(P, STANDARD, STANDARD, F("x1^2*x2*e1"))


def test_prop2_reports():
    p, phi, psi, u = example_data()
    assert check_prop2(p, phi, psi, u).passed
    rep = check_prop2(p, phi, phi, u)
    assert rep.skipped and not rep.passed
    rng = random.Random(6)
    w = construct_w_t5(p, phi, psi, random_harmonic_scalar(rng))
    assert check_prop2(p, phi, psi, w).passed


def test_lemma2_reports():
    p, phi, psi, u = example_data()
    assert check_lemma2(p, phi, psi, u).passed
    assert check_lemma2(p, phi, psi, ZERO).passed
    rng = random.Random(7)
    for _ in range(5):
        q = random_params(rng)
        a, b = random_structural_set(rng), random_structural_set(rng)
        assert check_lemma2(q, a, b, random_solution(rng, q, a, b, via="t6")).passed


def test_g_bar_is_conjugate_of_g_for_vector_fields():
    rng = random.Random(8)
    for _ in range(10):
        psi = random_structural_set(rng)
        u = random_solution(rng, P, psi, psi)
        # conjugation swaps the one-sided operators on 1-vector fields
        assert conjugate_field(left_dirac(psi, u)) == right_dirac(u, psi)
        pair = g_pair(P, psi, u)
        assert conjugate_field(pair.g) == pair.g_bar


def test_solution_space_is_linear():
    rng = random.Random(9)
    p = random_params(rng)
    phi, psi = random_structural_set(rng), random_structural_set(rng)
    a = random_solution(rng, p, phi, psi)
    b = random_solution(rng, p, phi, psi, via="t6")
    assert not lame_phi_psi(p, phi, psi, a.scale(3) - b.scale(2))
