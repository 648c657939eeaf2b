"""Structural sets, psi-Dirac operators and the Lame-Navier operators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import E1, E2, E3, Multivector, mv_mul
from .errors import InadmissibleParams, NotOneVector, NotOrthonormal
from .fields import MVField, Polynomial, left_mul, right_mul
from .scalars import QuadScalar, as_scalar, get_radicand


@dataclass(frozen=True)
class StructuralSet:
    """Ordered orthonormal triple of 1-vectors (psi^1, psi^2, psi^3).

    Build through :func:`validate_structural_set` or :meth:`from_rows`;
    the raw constructor does not check anything.
    """

    vecs: tuple[Multivector, Multivector, Multivector]

    def __iter__(self):
        return iter(self.vecs)

    def __getitem__(self, i: int) -> Multivector:
        return self.vecs[i]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> StructuralSet:
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("a structural set needs three coefficient triples")
        return validate_structural_set([Multivector.vector(*r) for r in rows])

    @classmethod
    def standard(cls) -> StructuralSet:
        return cls((E1, E2, E3))

    def rows(self) -> list[list[QuadScalar]]:
        return [list(v.coeffs[1:4]) for v in self.vecs]

    def to_json(self) -> list[list[str]]:
        return [[str(c) for c in r] for r in self.rows()]

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.vecs) + "}"


def validate_structural_set(candidate: Sequence[Multivector]) -> StructuralSet:
    vecs = tuple(candidate)
    if len(vecs) != 3:
        raise ValueError("a structural set has exactly three entries")
    for i, v in enumerate(vecs, start=1):
        if not v.is_vector():
            raise NotOneVector(i)
    for i in range(3):
        for j in range(i, 3):
            anti = mv_mul(vecs[i], vecs[j]) + mv_mul(vecs[j], vecs[i])
            target = Multivector.scalar(-2 if i == j else 0)
            if anti != target:
                raise NotOrthonormal(i + 1, j + 1, anti)
    return StructuralSet(vecs)


STANDARD = StructuralSet.standard()


def _rotation(c: QuadScalar, s: QuadScalar, p: int, q: int) -> list[list[QuadScalar]]:
    m = [[as_scalar(int(i == j)) for j in range(3)] for i in range(3)]
    m[p][p], m[p][q] = c, -s
    m[q][p], m[q][q] = s, c
    return m


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(3)), as_scalar(0)) for j in range(3)] for i in range(3)]


_PYTHAGOREAN = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)]


def random_structural_set(rng: random.Random, max_rotations: int = 2) -> StructuralSet:
    """Exact random orthonormal frame.

    A signed coordinate permutation composed with up to ``max_rotations``
    plane rotations whose cosine and sine are exact: Pythagorean triples
    and, when the radicand is 2, the 45 degree rotation.
    """
    perm = list(range(3))
    rng.shuffle(perm)
    m = [[as_scalar(0)] * 3 for _ in range(3)]
    for i, j in enumerate(perm):
        m[i][j] = as_scalar(rng.choice((-1, 1)))
    for _ in range(rng.randint(0, max_rotations)):
        choices = len(_PYTHAGOREAN) + (1 if get_radicand() == 2 else 0)
        k = rng.randrange(choices)
        if k < len(_PYTHAGOREAN):
            a, b, h = _PYTHAGOREAN[k]
            c, s = as_scalar(Fraction(a, h)), as_scalar(Fraction(b, h))
            if rng.random() < 0.5:
                c, s = s, c
        else:
            c = s = QuadScalar(0, Fraction(1, 2))
        if rng.random() < 0.5:
            s = -s
        p, q = rng.sample(range(3), 2)
        m = _matmul(m, _rotation(c, s, p, q))
    return validate_structural_set([Multivector.vector(*row) for row in m])


# Dirac-type operators


def left_dirac(psi: StructuralSet, f: MVField) -> MVField:
    """sum_i psi^i * d_i f."""
    out = MVField.zero()
    for i, v in enumerate(psi.vecs, start=1):
        out = out + left_mul(v, f.partial(i))
    return out


def right_dirac(f: MVField, psi: StructuralSet) -> MVField:
    """sum_i (d_i f) * psi^i."""
    out = MVField.zero()
    for i, v in enumerate(psi.vecs, start=1):
        out = out + right_mul(f.partial(i), v)
    return out


def sandwich(phi: StructuralSet, f: MVField, psi: StructuralSet) -> MVField:
    """phi-Dirac from the left, then psi-Dirac from the right."""
    return right_dirac(left_dirac(phi, f), psi)


def bi_dirac(phi: StructuralSet, psi: StructuralSet, f: MVField) -> MVField:
    return left_dirac(phi, left_dirac(psi, f))


def laplacian(f: MVField) -> MVField:
    out = MVField.zero()
    for i in (1, 2, 3):
        out = out + f.partial(i).partial(i)
    return out


def nu(psi: StructuralSet, f: MVField) -> MVField:
    return omega(psi, f, psi)


def omega(phi: StructuralSet, f: MVField, psi: StructuralSet) -> MVField:
    """sum_i phi^i f psi^i."""
    out = MVField.zero()
    for a, b in zip(phi.vecs, psi.vecs):
        out = out + right_mul(left_mul(a, f), b)
    return out


def omega_tilde(psi: StructuralSet, f: MVField, phi: StructuralSet) -> MVField:
    """sum_i psi^i f phi^i."""
    return omega(psi, f, phi)


def x_psi_field(psi: StructuralSet) -> MVField:
    out = MVField.zero()
    for i, v in enumerate(psi.vecs, start=1):
        out = out + left_mul(v, MVField.scalar(Polynomial.var(i)))
    return out


# Lame parameters


@dataclass(frozen=True)
class LameParams:
    mu: QuadScalar
    lam: QuadScalar
    alpha: QuadScalar
    beta: QuadScalar

    @classmethod
    def from_mu_lambda(cls, mu, lam, strict: bool = True) -> LameParams:
        mu, lam = as_scalar(mu), as_scalar(lam)
        p = cls(mu, lam, (mu + lam) / 2, (3 * mu + lam) / 2)
        if strict:
            p.check()
        return p

    @classmethod
    def from_alpha_beta(cls, alpha, beta, strict: bool = True) -> LameParams:
        alpha, beta = as_scalar(alpha), as_scalar(beta)
        mu = beta - alpha
        p = cls(mu, 3 * alpha - beta, alpha, beta)
        if strict:
            p.check()
        return p

    def violations(self) -> list[str]:
        failed = []
        if not (self.beta - self.alpha) > 0:
            failed.append("beta - alpha > 0 (mu > 0)")
        if not (7 * self.alpha - self.beta) > 0:
            failed.append("7*alpha - beta > 0 (lambda > -2/3 mu)")
        return failed

    @property
    def admissible(self) -> bool:
        return not self.violations()

    def check(self) -> None:
        failed = self.violations()
        if failed:
            raise InadmissibleParams(failed)
        a, b = self.alpha, self.beta
        # consequences of admissibility that the theorems divide by
        assert a and b and a != b and a != -b and a + 2 * b, "admissible params must be nondegenerate"

    def message(self) -> str:
        if self.admissible:
            return "Coefficients meet Lame`s restrictions"
        return "Coefficients do not meet Lame`s restrictions"


def params_from(*, mu=None, lam=None, alpha=None, beta=None, strict: bool = True) -> LameParams:
    if mu is not None and lam is not None and alpha is None and beta is None:
        return LameParams.from_mu_lambda(mu, lam, strict)
    if alpha is not None and beta is not None and mu is None and lam is None:
        return LameParams.from_alpha_beta(alpha, beta, strict)
    raise ValueError("give exactly one of the pairs (mu, lambda) or (alpha, beta)")


def lame_phi_psi(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> MVField:
    """Residual alpha*[phi-D u psi-D] + beta*[phi-D psi-D u]."""
    return sandwich(phi, u, psi).scale(p.alpha) + bi_dirac(phi, psi, u).scale(p.beta)


def lame_psi(p: LameParams, psi: StructuralSet, u: MVField) -> MVField:
    return lame_phi_psi(p, psi, psi, u)


def lame_classical(p: LameParams, u: MVField) -> MVField:
    return lame_phi_psi(p, STANDARD, STANDARD, u)


APPLY_ORDER = (
    "D2f",
    "DphiDpsif",
    "DpsiDphif",
    "DphifDpsi",
    "DpsifDphi",
    "DphifDphi",
    "DpsifDpsi",
    "DfD",
    "Lcf",
    "Lcphif",
    "Lcpsif",
    "Lgf",
    "Lgif",
)


def lame_table(p: LameParams, phi: StructuralSet, psi: StructuralSet, f: MVField) -> dict[str, MVField]:
    """All second-order quantities of f, keyed and ordered as in APPLY_ORDER.

    ``D2f`` is the standard Dirac operator applied twice, i.e. minus the
    Laplacian; the ``Lc*`` entries are the (phi,phi)-, (psi,psi)- and
    classical operators, ``Lgf``/``Lgif`` the mixed ones in both orders.
    """
    d2f = -laplacian(f)
    out = {
        "D2f": d2f,
        "DphiDpsif": bi_dirac(phi, psi, f),
        "DpsiDphif": bi_dirac(psi, phi, f),
        "DphifDpsi": sandwich(phi, f, psi),
        "DpsifDphi": sandwich(psi, f, phi),
        "DphifDphi": sandwich(phi, f, phi),
        "DpsifDpsi": sandwich(psi, f, psi),
        "DfD": sandwich(STANDARD, f, STANDARD),
    }
    a, b = p.alpha, p.beta
    out["Lcf"] = out["DfD"].scale(a) + d2f.scale(b)
    out["Lcphif"] = out["DphifDphi"].scale(a) + d2f.scale(b)
    out["Lcpsif"] = out["DpsifDpsi"].scale(a) + d2f.scale(b)
    out["Lgf"] = out["DphifDpsi"].scale(a) + out["DphiDpsif"].scale(b)
    out["Lgif"] = out["DpsifDphi"].scale(a) + out["DpsiDphif"].scale(b)
    return {k: out[k] for k in APPLY_ORDER}
