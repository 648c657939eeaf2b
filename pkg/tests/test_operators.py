import random

import pytest

from clifflame.algebra import E1, E2, E3, Multivector
from clifflame.checks import COUNTEREXAMPLE_FIELD, EXAMPLE_FIELD, counterexample_data, example_data
from clifflame.errors import InadmissibleParams, NotOneVector, NotOrthonormal
from clifflame.expr import parse_field, parse_multivector
from clifflame.fields import MVField, random_field
from clifflame.operators import (
    APPLY_ORDER,
    STANDARD,
    StructuralSet,
    bi_dirac,
    lame_classical,
    lame_phi_psi,
    lame_psi,
    lame_table,
    laplacian,
    left_dirac,
    nu,
    omega,
    omega_tilde,
    params_from,
    random_structural_set,
    right_dirac,
    sandwich,
    validate_structural_set,
    x_psi_field,
)
from clifflame.scalars import QuadScalar
from clifflame.theorems import construct_w_t5

F = parse_field
PHI = StructuralSet.from_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
U = F(EXAMPLE_FIELD)
P = params_from(alpha="1/10", beta="1/5")


def test_validate_examples():
    assert validate_structural_set([E1, E2, E3]) == STANDARD
    _, _, psi = counterexample_data()
    assert psi[0] == parse_multivector("sqrt(2)/2*e1 + sqrt(2)/2*e3")
    with pytest.raises(NotOrthonormal) as exc:
        validate_structural_set([E1, E1, E3])
    assert exc.value.pair == (1, 2)
    rot = [parse_multivector(s) for s in ("3/5*e1 + 4/5*e2", "-4/5*e1 + 3/5*e2", "e3")]
    validate_structural_set(rot)
    with pytest.raises(NotOneVector) as exc:
        validate_structural_set([E1, E2, Multivector.blade(0b011)])
    assert exc.value.index == 3
    with pytest.raises(NotOrthonormal):
        validate_structural_set([E1 * 2, E2, E3])


def test_random_structural_sets_are_valid_and_varied():
    rng = random.Random(0)
    seen = set()
    for _ in range(200):
        s = random_structural_set(rng)
        validate_structural_set(s.vecs)
        seen.add(tuple(str(v) for v in s))
    assert len(seen) > 50
    assert any("sqrt" in "".join(k) for k in seen)
    assert any("/5" in "".join(k) for k in seen)


def test_left_dirac_examples():
    assert left_dirac(STANDARD, F("x1")) == F("e1")
    assert left_dirac(STANDARD, left_dirac(STANDARD, U)) == MVField.zero()
    _, _, psi = counterexample_data()
    assert left_dirac(psi, F("3 + e12")) == MVField.zero()


def test_right_dirac_examples():
    assert right_dirac(F("x1*e2"), STANDARD) == F("-e12")
    rng = random.Random(1)
    for _ in range(10):
        psi = random_structural_set(rng)
        assert right_dirac(x_psi_field(psi), psi) == F("-3")
        assert left_dirac(psi, x_psi_field(psi)) == F("-3")


def test_sandwich_examples():
    assert sandwich(PHI, U, STANDARD) == F("20*e2")
    assert sandwich(STANDARD, U, STANDARD) == F("10*e2")
    assert sandwich(PHI, U, PHI) == F("14*e2")
    g, phi, psi = counterexample_data()
    assert sandwich(phi, g, psi) == MVField.zero()
    assert sandwich(phi, g.grade(0), psi) == F("-2*e13")
    assert sandwich(phi, g.grade(2), psi) == F("2*e13")


def test_sandwich_order_does_not_matter():
    rng = random.Random(2)
    for _ in range(30):
        f = random_field(rng)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        assert sandwich(phi, f, psi) == right_dirac(left_dirac(phi, f), psi)


def test_bi_dirac_examples():
    assert bi_dirac(PHI, STANDARD, U) == F("-10*e2")
    assert bi_dirac(STANDARD, PHI, U) == F("-6*e2")


def test_laplacian_examples():
    assert laplacian(U) == MVField.zero()
    assert laplacian(F("x1^2")) == F("2")
    assert laplacian(F(COUNTEREXAMPLE_FIELD)) == F("2*e3e1")


def test_bi_dirac_same_set_is_minus_laplacian():
    rng = random.Random(3)
    for _ in range(30):
        f, psi = random_field(rng), random_structural_set(rng)
        assert bi_dirac(psi, psi, f) == -laplacian(f)


def test_nu_omega_examples():
    rng = random.Random(4)
    psi = random_structural_set(rng)
    assert nu(psi, U) == U
    assert nu(psi, F("1")) == F("-3")
    for _ in range(10):
        f = random_field(rng)
        assert omega(psi, f, psi) == nu(psi, f)
        phi = random_structural_set(rng)
        assert omega_tilde(psi, f, phi) == omega(psi, f, phi)


def test_lame_operators():
    assert lame_classical(P, U) == F("e2")
    assert lame_classical(P, F("x1*e2 + x3")) == MVField.zero()
    assert lame_phi_psi(P, PHI, PHI, U) == F("7/5*e2")
    assert lame_psi(P, STANDARD, U) == F("e2")
    assert lame_phi_psi(P, PHI, STANDARD, U) == MVField.zero()
    assert lame_phi_psi(P, STANDARD, PHI, U) == F("4/5*e2")
    w = construct_w_t5(P, PHI, PHI, F("x1*x2*x3"))
    assert lame_psi(P, PHI, w) == MVField.zero()
    rng = random.Random(5)
    for _ in range(10):
        f, psi = random_field(rng), random_structural_set(rng)
        assert lame_phi_psi(P, psi, psi, f) == lame_psi(P, psi, f)


def test_lame_table_of_zero_field():
    table = lame_table(P, PHI, STANDARD, MVField.zero())
    assert tuple(table) == APPLY_ORDER
    assert all(not v for v in table.values())


def test_params_examples():
    p = params_from(alpha="1/10", beta="1/5")
    assert p.admissible and p.mu == QuadScalar.parse("1/10") and p.lam == QuadScalar.parse("1/10")
    assert params_from(mu=p.mu, lam=p.lam) == p
    with pytest.raises(InadmissibleParams) as exc:
        params_from(alpha=1, beta=1)
    assert "mu > 0" in str(exc.value)
    with pytest.raises(InadmissibleParams) as exc:
        params_from(alpha=1, beta=8)
    assert exc.value.failed == ["7*alpha - beta > 0 (lambda > -2/3 mu)"]
    lax = params_from(alpha=1, beta=8, strict=False)
    assert not lax.admissible
    assert lax.message() == "Coefficients do not meet Lame`s restrictions"
    assert p.message() == "Coefficients meet Lame`s restrictions"
    with pytest.raises(ValueError):
        params_from(alpha=1)
    with pytest.raises(ValueError):
        params_from(alpha=1, beta=2, mu=1)


def test_example_data_is_consistent():
    p, phi, psi, u = example_data()
    assert (p, phi, psi, u) == (P, PHI, STANDARD, U)
