"""Polynomial multivector fields on R^3 and their exact calculus."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import algebra
from .algebra import GRADES, Multivector
from .scalars import ZERO, QuadScalar, as_scalar

Monomial = tuple  # (a1, a2, a3): x1^a1 * x2^a2 * x3^a3
CONST = (0, 0, 0)
AXES = (1, 2, 3)


def grlex_key(m: Monomial):
    """Sort key putting higher total degree first, then lexicographic."""
    return (-sum(m), tuple(-a for a in m))


class Polynomial:
    """Sparse polynomial in x1, x2, x3 with QuadScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if c:
                    m = tuple(int(a) for a in m)
                    if len(m) != 3 or min(m) < 0:
                        raise ValueError(f"bad monomial {m}")
                    clean[m] = c
        self.terms: dict[Monomial, QuadScalar] = clean

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls({CONST: c})

    @classmethod
    def var(cls, i: int) -> Polynomial:
        exps = [0, 0, 0]
        exps[i - 1] = 1
        return cls({tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Polynomial) -> Polynomial:
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, s: QuadScalar) -> Polynomial:
        if not s:
            return Polynomial._raw({})
        return Polynomial._raw({m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(as_scalar(other))
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = lambda self, other: self.scale(as_scalar(other))

    def partial(self, i: int) -> Polynomial:
        if i not in AXES:
            raise ValueError(f"axis must be 1, 2 or 3, got {i}")
        k = i - 1
        out = {}
        for m, c in self.terms.items():
            a = m[k]
            if a:
                dm = list(m)
                dm[k] = a - 1
                out[tuple(dm)] = c * a
        return Polynomial._raw(out)

    def evaluate(self, point: Sequence) -> QuadScalar:
        p = [as_scalar(v) for v in point]
        total = ZERO
        for m, c in self.terms.items():
            term = c
            for v, a in zip(p, m):
                if a:
                    term = term * v**a
            total = total + term
        return total

    def sorted_terms(self) -> list[tuple[Monomial, QuadScalar]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .expr import format_polynomial

        return format_polynomial(self)

    def to_json(self) -> dict:
        return {"terms": [{"exps": list(m), "coef": str(c)} for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> Polynomial:
        if isinstance(data, str):
            from .expr import parse_polynomial

            return parse_polynomial(data)
        if isinstance(data, (int, float)):
            return cls.const(as_scalar(Fraction(str(data))))
        terms: dict = {}
        for t in data["terms"]:
            m = tuple(t["exps"])
            c = as_scalar(t["coef"] if not isinstance(t["coef"], float) else Fraction(str(t["coef"])))
            terms[m] = terms.get(m, ZERO) + c
        return cls(terms)


ZERO_POLY = Polynomial._raw({})


class MVField:
    """A polynomial R_{0,3}-valued field: 8 polynomials in canonical blade order."""

    __slots__ = ("comps",)

    def __init__(self, comps: Iterable[Polynomial] = ()):
        cs = list(comps)
        if len(cs) > 8:
            raise ValueError("a field has at most 8 components")
        cs += [ZERO_POLY] * (8 - len(cs))
        self.comps: tuple[Polynomial, ...] = tuple(cs)

    @classmethod
    def _raw(cls, comps) -> MVField:
        obj = object.__new__(cls)
        obj.comps = tuple(comps)
        return obj

    @classmethod
    def zero(cls) -> MVField:
        return cls._raw([ZERO_POLY] * 8)

    @classmethod
    def scalar(cls, p: Polynomial) -> MVField:
        return cls([p])

    @classmethod
    def constant(cls, a: Multivector) -> MVField:
        return cls._raw([Polynomial.const(c) if c else ZERO_POLY for c in a.coeffs])

    @classmethod
    def vector(cls, p1: Polynomial, p2: Polynomial, p3: Polynomial) -> MVField:
        return cls([ZERO_POLY, p1, p2, p3])

    @classmethod
    def from_blades(cls, parts: Mapping[str, Polynomial]) -> MVField:
        cs = [ZERO_POLY] * 8
        for name, p in parts.items():
            cs[algebra.NAMES.index(name)] = p
        return cls._raw(cs)

    def __getitem__(self, k: int) -> Polynomial:
        return self.comps[k]

    def is_zero(self) -> bool:
        return not any(p.terms for p in self.comps)

    def __bool__(self):
        return not self.is_zero()

    def is_vector_valued(self) -> bool:
        return all(not p.terms for k, p in enumerate(self.comps) if GRADES[k] != 1)

    def is_scalar_valued(self) -> bool:
        return all(not p.terms for p in self.comps[1:])

    def degree(self) -> int:
        return max(p.degree() for p in self.comps)

    def __eq__(self, other):
        if isinstance(other, MVField):
            return self.comps == other.comps
        return NotImplemented

    def __hash__(self):
        return hash(self.comps)

    def __add__(self, other: MVField) -> MVField:
        return MVField._raw([a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self) -> MVField:
        return MVField._raw([-a for a in self.comps])

    def __sub__(self, other: MVField) -> MVField:
        return MVField._raw([a - b for a, b in zip(self.comps, other.comps)])

    def scale(self, s) -> MVField:
        s = as_scalar(s)
        return MVField._raw([a.scale(s) for a in self.comps])

    def __mul__(self, other):
        if isinstance(other, MVField):
            return field_mul(self, other)
        if isinstance(other, Multivector):
            return field_mul(self, MVField.constant(other))
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return field_mul(MVField.constant(other), self)
        return self.scale(other)

    def __truediv__(self, other) -> MVField:
        return self.scale(as_scalar(other).inverse())

    def partial(self, i: int) -> MVField:
        return partial(self, i)

    def grade(self, k: int) -> MVField:
        return grade_project_field(self, k)

    def evaluate(self, point: Sequence) -> Multivector:
        return evaluate(self, point)

    def __repr__(self):
        return f"MVField({self})"

    def __str__(self):
        from .expr import format_field

        return format_field(self)

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in self.comps]

    @classmethod
    def from_json(cls, data: Sequence) -> MVField:
        if len(data) != 8:
            raise ValueError("field JSON needs exactly 8 polynomial entries")
        return cls(Polynomial.from_json(d) for d in data)


def partial(f: MVField, i: int) -> MVField:
    return MVField._raw([p.partial(i) for p in f.comps])


def field_mul(f: MVField, g: MVField) -> MVField:
    """Pointwise Clifford product of two fields."""
    out = [ZERO_POLY] * 8
    table = algebra.product_table()
    for i, p in enumerate(f.comps):
        if not p.terms:
            continue
        row = table[i]
        for j, q in enumerate(g.comps):
            if not q.terms:
                continue
            sign, k = row[j]
            pq = p * q
            out[k] = out[k] + pq if sign > 0 else out[k] - pq
    return MVField._raw(out)


def left_mul(a: Multivector, f: MVField) -> MVField:
    """The field x -> a * f(x) for a constant multivector a."""
    out = [ZERO_POLY] * 8
    table = algebra.product_table()
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        row = table[i]
        for j, q in enumerate(f.comps):
            if not q.terms:
                continue
            sign, k = row[j]
            out[k] = out[k] + q.scale(c if sign > 0 else -c)
    return MVField._raw(out)


def right_mul(f: MVField, a: Multivector) -> MVField:
    """The field x -> f(x) * a for a constant multivector a."""
    out = [ZERO_POLY] * 8
    table = algebra.product_table()
    for i, p in enumerate(f.comps):
        if not p.terms:
            continue
        row = table[i]
        for j, c in enumerate(a.coeffs):
            if not c:
                continue
            sign, k = row[j]
            out[k] = out[k] + p.scale(c if sign > 0 else -c)
    return MVField._raw(out)


def grade_project_field(f: MVField, k: int) -> MVField:
    if not 0 <= k <= 3:
        raise ValueError(f"grade must be in 0..3, got {k}")
    return MVField._raw([p if GRADES[s] == k else ZERO_POLY for s, p in enumerate(f.comps)])


def conjugate_field(f: MVField) -> MVField:
    return MVField._raw([p if s > 0 else -p for p, s in zip(f.comps, algebra.CONJ_SIGNS)])


def evaluate(f: MVField, point: Sequence) -> Multivector:
    if len(point) != 3:
        raise ValueError("evaluation point needs 3 coordinates")
    return Multivector._raw([p.evaluate(point) for p in f.comps])


def coordinate(i: int) -> Polynomial:
    return Polynomial.var(i)


def random_polynomial(rng: random.Random, max_degree: int = 4, max_terms: int = 3) -> Polynomial:
    """Random sparse polynomial with coefficients drawn from {-9..9}/{1..9}."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(0, max_degree)
        a1 = rng.randint(0, d)
        a2 = rng.randint(0, d - a1)
        terms[(a1, a2, d - a1 - a2)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Polynomial(terms)


def random_field(
    rng: random.Random,
    max_degree: int = 4,
    max_terms: int = 3,
    grades: Iterable[int] = (0, 1, 2, 3),
) -> MVField:
    """Reproducible random field; components outside ``grades`` are zero."""
    grades = set(grades)
    return MVField._raw(
        [
            random_polynomial(rng, max_degree, max_terms) if GRADES[s] in grades else ZERO_POLY
            for s in range(8)
        ]
    )


def random_vector_field(rng: random.Random, max_degree: int = 4, max_terms: int = 3) -> MVField:
    return random_field(rng, max_degree, max_terms, grades=(1,))
