"""Decompositions and solution constructions for the generalized Lame-Navier system.

Every constructor checks its own postconditions and raises
:class:`VerificationFailed` if a returned object does not satisfy them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    DegenerateFactor,
    NotASolution,
    NotVectorValued,
    PreconditionViolated,
    VerificationFailed,
)
from .fields import MVField, grade_project_field
from .operators import (
    LameParams,
    StructuralSet,
    bi_dirac,
    lame_phi_psi,
    laplacian,
    left_dirac,
    omega,
    right_dirac,
    sandwich,
    x_psi_field,
)
from .scalars import QuadScalar


@dataclass(frozen=True)
class MemberClass:
    """A function class given as the kernel of an operator.

    ``kind`` is ``"harmonic"`` (kernel of the Laplacian), ``"H"`` (kernel
    of left-then-left Dirac operators) or ``"I"`` (kernel of the two-sided
    sandwich).  ``left``/``right`` name the structural sets, ``"phi"`` or
    ``"psi"``.
    """

    kind: str
    left: str = "psi"
    right: str = "psi"

    def residual(self, phi: StructuralSet, psi: StructuralSet, f: MVField) -> MVField:
        sets = {"phi": phi, "psi": psi}
        a, b = sets[self.left], sets[self.right]
        if self.kind == "harmonic":
            return laplacian(f)
        if self.kind == "H":
            return bi_dirac(a, b, f)
        if self.kind == "I":
            return sandwich(a, f, b)
        raise ValueError(f"unknown class kind {self.kind!r}")

    def __str__(self):
        if self.kind == "harmonic":
            return "H"
        return f"{self.kind}({self.left},{self.right})"


HARMONIC = MemberClass("harmonic")
I_PSI_PSI = MemberClass("I", "psi", "psi")
I_PHI_PSI = MemberClass("I", "phi", "psi")
I_PSI_PHI = MemberClass("I", "psi", "phi")
H_PHI_PSI = MemberClass("H", "phi", "psi")


@dataclass(frozen=True)
class Decomposition:
    h: MVField
    i: MVField
    h_class: MemberClass
    i_class: MemberClass
    scale_factor: QuadScalar

    def residuals(self, phi: StructuralSet, psi: StructuralSet) -> dict[str, MVField]:
        return {
            f"h in {self.h_class}": self.h_class.residual(phi, psi, self.h),
            f"i in {self.i_class}": self.i_class.residual(phi, psi, self.i),
        }

    def to_json(self) -> dict:
        return {
            "h": str(self.h),
            "i": str(self.i),
            "h_class": str(self.h_class),
            "i_class": str(self.i_class),
            "scale_factor": str(self.scale_factor),
        }


@dataclass(frozen=True)
class GFieldPair:
    g: MVField
    g_bar: MVField


def g_pair(p: LameParams, psi: StructuralSet, u: MVField) -> GFieldPair:
    """g = alpha*(u psi-D) + beta*(psi-D u) and g_bar with the weights swapped."""
    right = right_dirac(u, psi)
    left = left_dirac(psi, u)
    return GFieldPair(
        g=right.scale(p.alpha) + left.scale(p.beta),
        g_bar=left.scale(p.alpha) + right.scale(p.beta),
    )


def _nonzero(value: QuadScalar, name: str) -> QuadScalar:
    if not value:
        raise DegenerateFactor(name)
    return value


def _alpha_beta(p: LameParams) -> tuple[QuadScalar, QuadScalar]:
    return _nonzero(p.alpha, "alpha"), _nonzero(p.beta, "beta")


def _require_vector(u: MVField, what: str = "u") -> None:
    if not u.is_vector_valued():
        raise NotVectorValued(f"{what} must be vector-valued, got {u}")


def _require_zero(name: str, residual: MVField) -> None:
    if residual:
        raise PreconditionViolated(name, residual)


def _self_check(dec: Decomposition, u: MVField, phi: StructuralSet, psi: StructuralSet) -> Decomposition:
    if dec.h + dec.i != u:
        raise VerificationFailed(f"h + i != u; difference {dec.h + dec.i - u}")
    for name, r in dec.residuals(phi, psi).items():
        if r:
            raise VerificationFailed(f"{name} fails with residual {r}")
    return dec


def decompose_t1(p: LameParams, psi: StructuralSet, u: MVField) -> Decomposition:
    """Split a vector solution of the (psi, psi) system into harmonic + I(psi,psi)."""
    _require_vector(u)
    residual = lame_phi_psi(p, psi, psi, u)
    if residual:
        raise NotASolution(residual)
    a, b = _alpha_beta(p)
    g = g_pair(p, psi, u).g
    gx = g * x_psi_field(psi)
    k_inf = a * a / b - b
    k_harm = 2 * (b * b / a - a)
    c = _nonzero(k_inf - k_harm, "alpha^2/beta - beta - 2 beta^2/alpha + 2 alpha")
    big_i = gx - u.scale(k_inf)
    big_h = gx - u.scale(k_harm)
    # the 1-vector parts keep their classes because phi = psi here
    dec = Decomposition(
        h=grade_project_field(big_h / c, 1),
        i=grade_project_field(-big_i / c, 1),
        h_class=HARMONIC,
        i_class=I_PSI_PSI,
        scale_factor=c,
    )
    return _self_check(dec, u, psi, psi)


def decompose_t2(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> Decomposition:
    """Split a harmonic, (psi,psi)-inframonogenic solution into H(phi,psi) + I(phi,psi)."""
    _require_vector(u)
    _require_zero("harmonic", laplacian(u))
    _require_zero("Lame system (phi, psi)", lame_phi_psi(p, phi, psi, u))
    _require_zero("(psi,psi)-inframonogenic", sandwich(psi, u, psi))
    a, b = _alpha_beta(p)
    gx = g_pair(p, psi, u).g * x_psi_field(psi)
    factor = _nonzero(2 * a - 2 * b * b / a, "2 alpha - 2 beta^2/alpha")
    dec = Decomposition(
        h=(gx - u.scale(2 * (b * b / a - a))) / factor,
        i=-gx / factor,
        h_class=H_PHI_PSI,
        i_class=I_PHI_PSI,
        scale_factor=factor,
    )
    return _self_check(dec, u, phi, psi)


def decompose_t3(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> Decomposition:
    """Split a harmonic solution into H(phi,psi) + I(psi,phi).

    Note the class of the second part has the structural sets swapped.
    """
    _require_vector(u)
    _require_zero("harmonic", laplacian(u))
    _require_zero("Lame system (phi, psi)", lame_phi_psi(p, phi, psi, u))
    a, b = _alpha_beta(p)
    pair = g_pair(p, psi, u)
    mixed = (pair.g - pair.g_bar.scale(a / b)) * x_psi_field(psi)
    k = 2 * a - b - 2 * a**3 / (b * b) + a * a / b
    d = _nonzero(4 * a - 2 * a**3 / (b * b) - 2 * b * b / a, "4 alpha - 2 alpha^3/beta^2 - 2 beta^2/alpha")
    i_star = mixed - u.scale(k)
    big_h = i_star + u.scale(d)
    dec = Decomposition(
        h=big_h / d,
        i=-i_star / d,
        h_class=H_PHI_PSI,
        i_class=I_PSI_PHI,
        scale_factor=d,
    )
    return _self_check(dec, u, phi, psi)


# reports


@dataclass
class Residual:
    name: str
    field: MVField

    @property
    def zero(self) -> bool:
        return self.field.is_zero()

    def to_json(self) -> dict:
        return {"name": self.name, "residual": str(self.field), "zero": self.zero}


@dataclass
class Report:
    """Outcome of a verification.

    ``passed`` means every conclusion residual vanished and the conclusion
    was actually checked (it is skipped when a required hypothesis fails).
    """

    check: str
    hypothesis_residuals: list[Residual] = field(default_factory=list)
    conclusion_residuals: list[Residual] = field(default_factory=list)
    skipped: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return all(r.zero for r in self.hypothesis_residuals)

    @property
    def passed(self) -> bool:
        return not self.skipped and all(r.zero for r in self.conclusion_residuals)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "hypothesis_residuals": [r.to_json() for r in self.hypothesis_residuals],
            "conclusion_residuals": [r.to_json() for r in self.conclusion_residuals],
            "skipped": self.skipped,
            "notes": list(self.notes),
            "pass": self.passed,
        }

    def summary(self) -> str:
        lines = [f"{self.check}: {'PASS' if self.passed else ('SKIPPED' if self.skipped else 'FAIL')}"]
        for label, group in (("hypothesis", self.hypothesis_residuals), ("conclusion", self.conclusion_residuals)):
            for r in group:
                lines.append(f"  [{label}] {r.name}: {'0' if r.zero else r.field}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def verify_decomposition_t4(
    p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField, h: MVField, i_star: MVField
) -> Report:
    """Check a candidate splitting u = h + i* with h in H(phi,psi), i* in I(psi,phi).

    No constructor exists for this case; only supplied candidates are checked.
    """
    return Report(
        check="theorem4",
        hypothesis_residuals=[
            Residual("Lame system (phi, psi)", lame_phi_psi(p, phi, psi, u)),
            Residual("u (psi,psi)-inframonogenic", sandwich(psi, u, psi)),
            Residual("u vector-valued", u - grade_project_field(u, 1)),
        ],
        conclusion_residuals=[
            Residual("u - (h + i*)", u - h - i_star),
            Residual("h in H(phi,psi)", bi_dirac(phi, psi, h)),
            Residual("i* in I(psi,phi)", sandwich(psi, i_star, phi)),
        ],
    )


def _construct(
    name: str,
    hypotheses: list[tuple[str, Callable[[], MVField]]],
    build: Callable[[], MVField],
) -> MVField:
    """Build a field if at least one of the alternative hypotheses holds."""
    failures = []
    for label, residual in hypotheses:
        r = residual()
        if not r:
            break
        failures.append((label, r))
    else:
        label = " or ".join(lbl for lbl, _ in failures)
        raise PreconditionViolated(f"{name}: {label}", failures[0][1])
    return build()


def construct_w_t5(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> MVField:
    """w = u psi-D - (beta/alpha) psi-D u for harmonic or (phi,psi)-inframonogenic u."""
    a, b = _alpha_beta(p)
    w = _construct(
        "theorem5",
        [("harmonic", lambda: laplacian(u)), ("(phi,psi)-inframonogenic", lambda: sandwich(phi, u, psi))],
        lambda: right_dirac(u, psi) - left_dirac(psi, u).scale(b / a),
    )
    r = lame_phi_psi(p, phi, psi, w)
    if r:
        raise VerificationFailed(f"theorem5 output is not a solution; residual {r}")
    return w


def construct_w_t6(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> MVField:
    """w~ = u psi-D - (alpha/beta) psi-D u for (phi,psi)-harmonic or (psi,psi)-inframonogenic u."""
    a, b = _alpha_beta(p)
    w = _construct(
        "theorem6",
        [
            ("(phi,psi)-harmonic", lambda: bi_dirac(phi, psi, u)),
            ("(psi,psi)-inframonogenic", lambda: sandwich(psi, u, psi)),
        ],
        lambda: right_dirac(u, psi) - left_dirac(psi, u).scale(a / b),
    )
    r = lame_phi_psi(p, phi, psi, w)
    if r:
        raise VerificationFailed(f"theorem6 output is not a solution; residual {r}")
    return w


def t7_hypotheses(phi: StructuralSet, psi: StructuralSet, h: MVField) -> list[Residual]:
    return [
        Residual("harmonic", laplacian(h)),
        Residual("(phi,psi)-harmonic", bi_dirac(phi, psi, h)),
        Residual("omega(psi-D h) + phi-D h", omega(phi, left_dirac(psi, h), psi) + left_dirac(phi, h)),
    ]


def conjugate_infra_t7(p: LameParams, phi: StructuralSet, psi: StructuralSet, h: MVField) -> MVField:
    """Inframonogenic partner i = alpha/(2 beta) [h + (psi-D h) x_psi] of h."""
    _require_vector(h, "h")
    for r in t7_hypotheses(phi, psi, h):
        _require_zero(r.name, r.field)
    a, b = _alpha_beta(p)
    i = (h + left_dirac(psi, h) * x_psi_field(psi)).scale(a / (2 * b))
    for label, r in (
        ("i in I(phi,psi)", sandwich(phi, i, psi)),
        ("h + i solves the system", lame_phi_psi(p, phi, psi, h + i)),
    ):
        if r:
            raise VerificationFailed(f"theorem7: {label} fails with residual {r}")
    return i


def t8_hypotheses(phi: StructuralSet, psi: StructuralSet, i: MVField) -> list[Residual]:
    return [
        Residual("(psi,psi)-inframonogenic", sandwich(psi, i, psi)),
        Residual("(phi,psi)-inframonogenic", sandwich(phi, i, psi)),
        Residual("phi-D omega(i) - psi-D i", left_dirac(phi, omega(phi, i, psi)) - left_dirac(psi, i)),
    ]


def conjugate_harmonic_t8(p: LameParams, phi: StructuralSet, psi: StructuralSet, i: MVField) -> MVField:
    """(phi,psi)-harmonic partner h = beta/alpha [2 i + (i psi-D) x_psi] of i."""
    _require_vector(i, "i")
    for r in t8_hypotheses(phi, psi, i):
        _require_zero(r.name, r.field)
    a, b = _alpha_beta(p)
    h = (i.scale(2) + right_dirac(i, psi) * x_psi_field(psi)).scale(b / a)
    for label, r in (
        ("h in H(phi,psi)", bi_dirac(phi, psi, h)),
        ("h + i solves the system", lame_phi_psi(p, phi, psi, h + i)),
    ):
        if r:
            raise VerificationFailed(f"theorem8: {label} fails with residual {r}")
    return h


def check_prop2(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> Report:
    """A solution of the (phi, psi) system satisfies psi-D^3 u = 0."""
    system = lame_phi_psi(p, phi, psi, u)
    report = Report(check="prop2", hypothesis_residuals=[Residual("Lame system (phi, psi)", system)])
    if not u.is_vector_valued():
        report.notes.append("u is not vector-valued")
    if system:
        report.skipped = True
        report.notes.append("u does not solve the system; third-order check skipped")
        return report
    triple = left_dirac(psi, left_dirac(psi, left_dirac(psi, u)))
    report.conclusion_residuals.append(Residual("psi-D^3 u", triple))
    report.conclusion_residuals.append(Residual("biharmonic", laplacian(laplacian(u))))
    return report


def check_lemma2(p: LameParams, phi: StructuralSet, psi: StructuralSet, u: MVField) -> Report:
    """Check the two second-order identities satisfied by g x_psi."""
    _require_vector(u)
    system = lame_phi_psi(p, phi, psi, u)
    _require_zero("Lame system (phi, psi)", system)
    a, b = _alpha_beta(p)
    pair = g_pair(p, psi, u)
    x = x_psi_field(psi)
    gx = pair.g * x
    ddg_x = bi_dirac(phi, psi, pair.g) * x
    om_lap = omega(phi, laplacian(u), psi)
    k_inf = a * a / b - b
    k_harm = 2 * (b * b / a - a)

    lhs1 = bi_dirac(phi, psi, gx)
    rhs1 = ddg_x - sandwich(phi, gx, psi).scale(a / b) + om_lap.scale(k_inf) + bi_dirac(phi, psi, u).scale(k_harm)
    lhs2 = bi_dirac(phi, psi, gx - (pair.g_bar * x).scale(a / b) - u.scale(k_inf + k_harm))
    rhs2 = ddg_x + om_lap.scale(k_inf)
    return Report(
        check="lemma2",
        hypothesis_residuals=[Residual("Lame system (phi, psi)", system)],
        conclusion_residuals=[Residual("identity (8)", lhs1 - rhs1), Residual("identity (9)", lhs2 - rhs2)],
    )
