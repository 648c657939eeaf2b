"""Exact kernel search over polynomial ansatz spaces.

Used to find fields satisfying linear hypotheses (harmonicity, kernel
conditions of the theorems) by Gaussian elimination over Q(sqrt(n)).
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Sequence

from .algebra import GRADES
from .fields import MVField, Polynomial, ZERO_POLY
from .scalars import ZERO, QuadScalar, as_scalar


def monomials_up_to(degree: int) -> list[tuple[int, int, int]]:
    out = []
    for d in range(degree + 1):
        for a1 in range(d, -1, -1):
            for a2 in range(d - a1, -1, -1):
                out.append((a1, a2, d - a1 - a2))
    return out


def ansatz_basis(degree: int, grades: Iterable[int] = (1,), homogeneous: bool = False) -> list[MVField]:
    """Unit fields ``x^m e_A`` spanning the ansatz space."""
    grades = set(grades)
    monos = [m for m in monomials_up_to(degree) if not homogeneous or sum(m) == degree]
    basis = []
    for slot in range(8):
        if GRADES[slot] not in grades:
            continue
        for m in monos:
            comps = [ZERO_POLY] * 8
            comps[slot] = Polynomial({m: 1})
            basis.append(MVField(comps))
    return basis


def nullspace(rows: Sequence[Sequence[QuadScalar]], ncols: int) -> list[list[QuadScalar]]:
    """Basis of {c : A c = 0} by exact Gauss-Jordan elimination."""
    a = [[as_scalar(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(a)) if a[k][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inverse()
        a[r] = [x * inv for x in a[r]]
        for k in range(len(a)):
            if k != r and a[k][col]:
                factor = a[k][col]
                a[k] = [x - factor * y for x, y in zip(a[k], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = as_scalar(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -a[row_idx][fc]
        basis.append(vec)
    return basis


def _flatten(f: MVField) -> dict:
    return {(k, m): c for k, p in enumerate(f.comps) for m, c in p.terms.items()}


def kernel_fields(
    constraints: Sequence[Callable[[MVField], MVField]], basis: Sequence[MVField]
) -> list[MVField]:
    """Basis of the fields in span(basis) annihilated by every (linear) constraint."""
    images = [[_flatten(op(b)) for b in basis] for op in constraints]
    rows = []
    for per_op in images:
        keys = sorted({k for img in per_op for k in img})
        for key in keys:
            rows.append([img.get(key, ZERO) for img in per_op])
    vecs = nullspace(rows, len(basis))
    out = []
    for v in vecs:
        f = MVField.zero()
        for c, b in zip(v, basis):
            if c:
                f = f + b.scale(c)
        out.append(f)
    return out


def random_combination(rng: random.Random, fields: Sequence[MVField], lo: int = -3, hi: int = 3) -> MVField:
    """Random integer combination; nonzero whenever ``fields`` is non-empty."""
    if not fields:
        return MVField.zero()
    while True:
        f = MVField.zero()
        for b in fields:
            c = rng.randint(lo, hi)
            if c:
                f = f + b.scale(c)
        if f:
            return f


def harmonic_scalar_basis(degree: int) -> list[MVField]:
    from .operators import laplacian

    return kernel_fields([laplacian], ansatz_basis(degree, grades=(0,), homogeneous=True))
