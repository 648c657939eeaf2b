"""Named verification suites: identities, counterexample, factorization.

Each check returns a :class:`~clifflame.theorems.Report`.  Randomised suites
are deterministic for a given seed.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable

from .expr import parse_field, parse_multivector
from .fields import MVField, grade_project_field, random_field
from .operators import (
    STANDARD,
    LameParams,
    StructuralSet,
    bi_dirac,
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
from .search import ansatz_basis, harmonic_scalar_basis, kernel_fields, random_combination
from .theorems import (
    Report,
    Residual,
    check_lemma2,
    check_prop2,
    construct_w_t5,
    construct_w_t6,
)

EXAMPLE_FIELD = "x1*x2*e1 + (-2*x1^2 - 3*x2^2 + 5*x3^2)*e2 + x3*e3"
COUNTEREXAMPLE_FIELD = "1/2*x1^2 + 1/2*x2^2 + sqrt(2)*x1*x2 + (e3e1 - 1)*x3^2"


def example_data() -> tuple[LameParams, StructuralSet, StructuralSet, MVField]:
    """Worked example: alpha = 1/10, beta = 1/5, phi = {-e1, e2, e3}, psi standard."""
    phi = StructuralSet.from_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
    return params_from(alpha="1/10", beta="1/5"), phi, STANDARD, parse_field(EXAMPLE_FIELD)


def counterexample_data() -> tuple[MVField, StructuralSet, StructuralSet]:
    phi = validate_structural_set([parse_multivector(s) for s in ("e1", "e3", "e2")])
    psi = validate_structural_set(
        [parse_multivector(s) for s in ("sqrt(2)/2*(e1 + e3)", "sqrt(2)/2*(e1 - e3)", "e2")]
    )
    return parse_field(COUNTEREXAMPLE_FIELD), phi, psi


# Lemma 1: each item maps (f, phi, psi) to the differences LHS - RHS of its equalities


def _lemma1_items() -> dict[int, Callable[[MVField, StructuralSet, StructuralSet], list[MVField]]]:
    def item1(f, phi, psi):
        x = x_psi_field(psi)
        return [
            left_dirac(psi, f * x) - (left_dirac(psi, f) * x + nu(psi, f)),
            right_dirac(x * f, psi) - (x * right_dirac(f, psi) + nu(psi, f)),
        ]

    def item2(f, phi, psi):
        return [
            left_dirac(psi, nu(psi, f)) - (right_dirac(f, psi).scale(-2) - nu(psi, left_dirac(psi, f))),
            right_dirac(nu(psi, f), psi) - (left_dirac(psi, f).scale(-2) - nu(psi, right_dirac(f, psi))),
        ]

    def item3(f, phi, psi):
        n = nu(psi, f)
        twice_right = right_dirac(right_dirac(n, psi), psi)
        return [
            sandwich(psi, n, psi) - nu(psi, sandwich(psi, f, psi)),
            twice_right + laplacian(n),
            twice_right - nu(psi, bi_dirac(psi, psi, f)),
            twice_right + nu(psi, laplacian(f)),
        ]

    def item4(f, phi, psi):
        w = omega(phi, f, psi)
        twice_right = right_dirac(right_dirac(w, psi), psi)
        return [
            sandwich(phi, w, psi) - omega(phi, sandwich(phi, f, psi), psi),
            twice_right + laplacian(w),
            twice_right - omega(phi, bi_dirac(psi, psi, f), psi),
            twice_right + omega(phi, laplacian(f), psi),
        ]

    def item5(f, phi, psi):
        u = grade_project_field(f, 1)
        return [nu(psi, u) - u]

    def item6(f, phi, psi):
        return [
            left_dirac(phi, omega(phi, f, psi))
            - (right_dirac(f, psi).scale(-2) - omega(phi, left_dirac(phi, f), psi)),
            right_dirac(omega(phi, f, psi), psi)
            - (left_dirac(phi, f).scale(-2) - omega(phi, right_dirac(f, psi), psi)),
        ]

    def item7(f, phi, psi):
        x = x_psi_field(psi)
        return [
            left_dirac(phi, f * x) - (left_dirac(phi, f) * x + omega(phi, f, psi)),
            right_dirac(x * f, phi) - (x * right_dirac(f, phi) + omega_tilde(psi, f, phi)),
        ]

    def item8(f, phi, psi):
        lhs = bi_dirac(psi, phi, omega(phi, f, psi)) - omega(phi, bi_dirac(phi, psi, f), psi)
        rhs = left_dirac(phi, omega(phi, left_dirac(psi, f), psi)) - left_dirac(
            psi, omega(phi, left_dirac(phi, f), psi)
        )
        return [lhs - rhs]

    return {1: item1, 2: item2, 3: item3, 4: item4, 5: item5, 6: item6, 7: item7, 8: item8}


LEMMA1 = _lemma1_items()


def _suite(name: str, cases: int, run_case: Callable[[int], list[Residual]]) -> Report:
    report = Report(check=name)
    bad = 0
    for k in range(cases):
        failures = [r for r in run_case(k) if not r.zero]
        if failures:
            bad += 1
            report.conclusion_residuals.extend(failures)
    report.notes.append(f"{cases - bad}/{cases} cases exact")
    return report


def check_lemma1(item: int, seed: int = 0, cases: int = 100, max_degree: int = 4) -> Report:
    """Lemma 1 item on random (f, phi, psi); vector-valued f is irrelevant except for item 5."""
    identity = LEMMA1[item]
    rng = random.Random(f"lemma1.{item}:{seed}")

    def run_case(k):
        f = random_field(rng, max_degree)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        return [Residual(f"case {k} equality {j}", d) for j, d in enumerate(identity(f, phi, psi), start=1)]

    return _suite(f"lemma1.{item}", cases, run_case)


def check_factorization(seed: int = 0, cases: int = 100) -> Report:
    """psi-D psi-D f = -Laplacian f."""
    rng = random.Random(f"factorization:{seed}")

    def run_case(k):
        f, psi = random_field(rng), random_structural_set(rng)
        return [Residual(f"case {k}", bi_dirac(psi, psi, f) + laplacian(f))]

    return _suite("factorization", cases, run_case)


def check_sandwich_order(seed: int = 0, cases: int = 50) -> Report:
    """Left-then-right and right-then-left application orders agree."""
    rng = random.Random(f"order:{seed}")

    def run_case(k):
        f = random_field(rng)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        return [Residual(f"case {k}", sandwich(phi, f, psi) - left_dirac(phi, right_dirac(f, psi)))]

    return _suite("sandwich-order", cases, run_case)


@lru_cache(maxsize=None)
def _harmonic_basis(degree: int) -> tuple[MVField, ...]:
    return tuple(harmonic_scalar_basis(degree))


def random_harmonic_scalar(rng: random.Random, min_degree: int = 2, max_degree: int = 4) -> MVField:
    """Random nonzero harmonic scalar polynomial (sum of homogeneous harmonics)."""
    f = MVField.zero()
    for d in range(min_degree, max_degree + 1):
        if d == max_degree or rng.random() < 0.5:
            f = f + random_combination(rng, _harmonic_basis(d), -2, 2)
    return f


def random_solution(
    rng: random.Random, p: LameParams, phi: StructuralSet, psi: StructuralSet, via: str = "t5"
) -> MVField:
    """Vector solution of the (phi, psi) system built from a scalar harmonic seed."""
    u = random_harmonic_scalar(rng)
    build = construct_w_t5 if via == "t5" else construct_w_t6
    return build(p, phi, psi, u)


def random_params(rng: random.Random) -> LameParams:
    """Random admissible parameters with small rational mu > 0, lambda > -2mu/3."""
    from fractions import Fraction

    mu = Fraction(rng.randint(1, 9), rng.randint(1, 5))
    lam = Fraction(rng.randint(-6, 9), rng.randint(1, 5))
    if lam <= -2 * mu / 3:
        lam = mu
    return params_from(mu=mu, lam=lam)


def check_prop2_suite(seed: int = 0, cases: int = 50) -> Report:
    rng = random.Random(f"prop2:{seed}")

    def run_case(k):
        p = random_params(rng)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        u = random_solution(rng, p, phi, psi, via="t5" if k % 2 == 0 else "t6")
        rep = check_prop2(p, phi, psi, u)
        return [Residual(f"case {k}: {r.name}", r.field) for r in rep.hypothesis_residuals + rep.conclusion_residuals]

    return _suite("prop2", cases, run_case)


def check_lemma2_suite(seed: int = 0, cases: int = 50) -> Report:
    rng = random.Random(f"lemma2:{seed}")

    def run_case(k):
        p = random_params(rng)
        phi, psi = random_structural_set(rng), random_structural_set(rng)
        u = random_solution(rng, p, phi, psi, via="t6")
        rep = check_lemma2(p, phi, psi, u)
        return [Residual(f"case {k}: {r.name}", r.field) for r in rep.conclusion_residuals]

    return _suite("lemma2", cases, run_case)


def check_prop1(seed: int = 0, cases: int = 20) -> Report:
    """(psi,psi)-inframonogenicity holds for f iff it holds for every grade part.

    Forward direction on fields found by kernel search; backward direction
    through grade-wise commutation of the sandwich with grade projection.
    """
    rng = random.Random(f"prop1:{seed}")
    basis = ansatz_basis(2, grades=(0, 1, 2, 3))

    def run_case(k):
        psi = random_structural_set(rng)
        kernel = kernel_fields([lambda f: sandwich(psi, f, psi)], basis)
        f = random_combination(rng, kernel)
        out = [Residual(f"case {k}: constructed f", sandwich(psi, f, psi))]
        out += [
            Residual(f"case {k}: grade {g} of constructed f", sandwich(psi, grade_project_field(f, g), psi))
            for g in range(4)
        ]
        r = random_field(rng)
        whole = sandwich(psi, r, psi)
        out += [
            Residual(
                f"case {k}: grade {g} commutes",
                grade_project_field(whole, g) - sandwich(psi, grade_project_field(r, g), psi),
            )
            for g in range(4)
        ]
        return out

    return _suite("prop1", cases, run_case)


def check_counterexample() -> Report:
    """For phi != psi the grade-wise characterisation fails on the counterexample field g."""
    g, phi, psi = counterexample_data()
    expected = {
        0: parse_field("2*e3e1"),
        1: MVField.zero(),
        2: parse_field("-2*e3e1"),
        3: MVField.zero(),
    }
    report = Report(
        check="counterexample",
        hypothesis_residuals=[Residual("g in I(phi,psi)", sandwich(phi, g, psi))],
    )
    for k, want in expected.items():
        got = sandwich(phi, grade_project_field(g, k), psi)
        report.conclusion_residuals.append(Residual(f"grade {k} value minus {want}", got - want))
    report.conclusion_residuals.append(
        Residual("g itself is (phi,psi)-inframonogenic", sandwich(phi, g, psi))
    )
    report.notes.append("grade 0 and grade 2 parts are not (phi,psi)-inframonogenic although g is")
    return report


CHECKS: dict[str, Callable[..., Report]] = {
    **{f"lemma1.{k}": (lambda k: lambda seed=0, cases=100: check_lemma1(k, seed, cases))(k) for k in LEMMA1},
    "lemma2": check_lemma2_suite,
    "prop1": check_prop1,
    "prop2": check_prop2_suite,
    "factorization": check_factorization,
    "sandwich-order": check_sandwich_order,
    "counterexample": lambda seed=0, cases=None: check_counterexample(),
}


def run_check(name: str, seed: int = 0, cases: int | None = None) -> Report:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    if cases is None:
        return CHECKS[name](seed=seed)
    return CHECKS[name](seed=seed, cases=cases)
