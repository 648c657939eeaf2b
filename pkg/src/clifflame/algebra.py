"""The real Clifford algebra R_{0,3}.

Basis blades are bitmasks (bit i-1 set when e_i is a factor).  Multivectors
are stored densely as 8 coefficients in the canonical order

    1, e1, e2, e3, e12, e13, e23, e123
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, QuadScalar, as_scalar

# canonical slot -> bitmask
MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
SLOT = {m: k for k, m in enumerate(MASKS)}
NAMES = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
GRADES = tuple(bin(m).count("1") for m in MASKS)


def grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_name(mask: int) -> str:
    return NAMES[SLOT[mask]]


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Product of two basis blades, returned as ``(sign, mask)``.

    The sign counts the transpositions needed to bring the factors of
    ``e_a e_b`` into ascending order, plus one factor -1 for every
    generator squared away (e_i^2 = -1).
    """
    if not (0 <= a < 8 and 0 <= b < 8):
        raise ValueError("blade masks must lie in 0..7")
    swaps = 0
    x = a >> 1
    while x:
        swaps += grade(x & b)
        x >>= 1
    swaps += grade(a & b)
    return (-1 if swaps & 1 else 1), a ^ b


def _build_table(faulty: bool = False) -> tuple[tuple[tuple[int, int], ...], ...]:
    rows = []
    for i, a in enumerate(MASKS):
        row = []
        for j, b in enumerate(MASKS):
            sign, m = blade_product(a, b)
            if faulty and (a, b) == (0b010, 0b001):
                sign = -sign
            row.append((sign, SLOT[m]))
        rows.append(tuple(row))
    return tuple(rows)


# _TABLE[i][j] = (sign, k) with  e_slot(i) * e_slot(j) = sign * e_slot(k)
_TABLE = _build_table()


def inject_sign_fault(enabled: bool = True) -> None:
    """Corrupt (or restore) the sign of e2*e1 in the product table.

    Only used to check that the self-test notices a broken table.
    """
    global _TABLE
    _TABLE = _build_table(faulty=enabled)


def product_table():
    return _TABLE


class Multivector:
    """An element of R_{0,3} with exact QuadScalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        if len(cs) > 8:
            raise ValueError("a multivector has at most 8 coefficients")
        cs += [ZERO] * (8 - len(cs))
        self.coeffs: tuple[QuadScalar, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: Sequence[QuadScalar]) -> Multivector:
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def scalar(cls, s) -> Multivector:
        return cls([s])

    @classmethod
    def blade(cls, mask: int, coef=1) -> Multivector:
        cs = [ZERO] * 8
        cs[SLOT[mask]] = as_scalar(coef)
        return cls._raw(cs)

    @classmethod
    def vector(cls, v1, v2, v3) -> Multivector:
        return cls([0, v1, v2, v3])

    @classmethod
    def zero(cls) -> Multivector:
        return cls._raw([ZERO] * 8)

    def __getitem__(self, k: int) -> QuadScalar:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, QuadScalar)):
            return self == Multivector.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(other)
        return Multivector._raw([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw([-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(other)
        return Multivector._raw([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        if isinstance(other, (int, QuadScalar)) or hasattr(other, "denominator"):
            s = as_scalar(other)
            return Multivector._raw([a * s for a in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, QuadScalar)) or hasattr(other, "denominator"):
            s = as_scalar(other)
            return Multivector._raw([s * a for a in self.coeffs])
        return NotImplemented

    def __truediv__(self, other):
        inv = as_scalar(other).inverse()
        return Multivector._raw([a * inv for a in self.coeffs])

    def grade(self, k: int) -> Multivector:
        return grade_project(self, k)

    def conjugate(self) -> Multivector:
        return conjugate(self)

    def scalar_part(self) -> QuadScalar:
        return self.coeffs[0]

    def is_vector(self) -> bool:
        return all(not c for k, c in enumerate(self.coeffs) if GRADES[k] != 1)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Multivector:
        if len(data) != 8:
            raise ValueError("multivector JSON needs exactly 8 entries")
        return cls(as_scalar(c) for c in data)

    def __repr__(self):
        return f"Multivector([{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        from .expr import format_multivector

        return format_multivector(self)


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    out = [ZERO] * 8
    table = _TABLE
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            sign, k = row[j]
            if sign > 0:
                out[k] = out[k] + x * y
            else:
                out[k] = out[k] - x * y
    return Multivector._raw(out)


def grade_project(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= 3:
        raise ValueError(f"grade must be in 0..3, got {k}")
    return Multivector._raw([c if GRADES[s] == k else ZERO for s, c in enumerate(a.coeffs)])


# reversion composed with e_i -> -e_i: blade of grade g picks up (-1)^(g(g+1)/2)
CONJ_SIGNS = tuple(-1 if (g * (g + 1) // 2) % 2 else 1 for g in GRADES)


def conjugate(a: Multivector) -> Multivector:
    return Multivector._raw([c if s > 0 else -c for c, s in zip(a.coeffs, CONJ_SIGNS)])


def norm_sq(a: Multivector) -> QuadScalar:
    """Sc[a * conj(a)], which equals the sum of squared coefficients."""
    return mv_mul(a, conjugate(a)).scalar_part()


E0 = Multivector.scalar(ONE)
E1 = Multivector.blade(0b001)
E2 = Multivector.blade(0b010)
E3 = Multivector.blade(0b100)
