"""Exact arithmetic in Q(sqrt(n)) for one engine-wide square-free radicand n."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational

_RADICAND = 2


def _is_square_free(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def set_radicand(n: int) -> None:
    """Change the radicand used by newly created scalars.

    Existing QuadScalar values keep their own radicand; mixing the two in
    arithmetic raises ValueError.
    """
    global _RADICAND
    if not _is_square_free(n):
        raise ValueError(f"radicand must be a square-free integer > 1, got {n}")
    _RADICAND = n


def get_radicand() -> int:
    return _RADICAND


def split_square(k: int) -> tuple[int, int]:
    """Write k >= 0 as s**2 * m with m square-free; return (s, m)."""
    if k < 0:
        raise ValueError("negative radicand")
    if k == 0:
        return 0, 1
    s, m, d = 1, k, 2
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
            s *= d
        d += 1
    return s, m


@total_ordering
class QuadScalar:
    """The number ``rat + irr*sqrt(n)`` with rational ``rat`` and ``irr``.

    Instances are immutable and hashable.  Plain ints and Fractions are
    accepted wherever a QuadScalar is expected.
    """

    __slots__ = ("rat", "irr", "n")

    def __init__(self, rat: Rational | int | str = 0, irr: Rational | int | str = 0, n: int | None = None):
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "irr", Fraction(irr))
        object.__setattr__(self, "n", _RADICAND if n is None else n)

    @classmethod
    def _make(cls, rat: Fraction, irr: Fraction, n: int) -> QuadScalar:
        obj = object.__new__(cls)
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "irr", irr)
        object.__setattr__(obj, "n", n)
        return obj

    @classmethod
    def sqrt(cls, k: int = None) -> QuadScalar:
        """Exact square root of a non-negative integer lying in the field."""
        n = _RADICAND
        if k is None:
            k = n
        s, m = split_square(k)
        if m == 1:
            return cls._make(Fraction(s), Fraction(0), n)
        if m == n:
            return cls._make(Fraction(0), Fraction(s), n)
        raise ValueError(f"sqrt({k}) is not in Q(sqrt({n}))")

    @staticmethod
    def parse(text: str) -> QuadScalar:
        from .expr import parse_scalar

        return parse_scalar(text)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    def __reduce__(self):
        return (QuadScalar, (self.rat, self.irr, self.n))

    def _coerce(self, other) -> QuadScalar | None:
        if isinstance(other, QuadScalar):
            if other.n != self.n and other.irr and self.irr:
                raise ValueError(f"radicand mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar._make(Fraction(other), Fraction(0), self.n)
        return None

    # arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar._make(self.rat + o.rat, self.irr + o.irr, o.n if o.irr else self.n)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar._make(-self.rat, -self.irr, self.n)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar._make(self.rat - o.rat, self.irr - o.irr, o.n if o.irr else self.n)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, q, r, s = self.rat, self.irr, o.rat, o.irr
        if not q and not s:
            return QuadScalar._make(p * r, q, self.n)
        n = self.n if q else o.n
        return QuadScalar._make(p * r + q * s * n, p * s + q * r, n)

    __rmul__ = __mul__

    def inverse(self) -> QuadScalar:
        p, q = self.rat, self.irr
        norm = p * p - q * q * self.n
        if norm == 0:
            # only reachable for p = q = 0 because n is square-free
            assert not p and not q, "norm vanished on a nonzero element"
            raise ZeroDivisionError("inverse of zero QuadScalar")
        return QuadScalar._make(p / norm, -q / norm, self.n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadScalar._make(Fraction(1), Fraction(0), self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> QuadScalar:
        """Galois conjugate ``rat - irr*sqrt(n)``."""
        return QuadScalar._make(self.rat, -self.irr, self.n)

    # comparison

    def sign(self) -> int:
        p, q = self.rat, self.irr
        if not q:
            return (p > 0) - (p < 0)
        if not p:
            return (q > 0) - (q < 0)
        sp, sq = (p > 0) - (p < 0), (q > 0) - (q < 0)
        if sp == sq:
            return sp
        # opposite signs: the larger magnitude wins
        return sp if p * p > q * q * self.n else sq

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            if self.rat != other.rat or self.irr != other.irr:
                return False
            return not self.irr or self.n == other.n
        if isinstance(other, (int, Fraction)):
            return not self.irr and self.rat == other
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if not self.irr:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.n))

    def __bool__(self):
        return bool(self.rat) or bool(self.irr)

    def is_rational(self) -> bool:
        return not self.irr

    def __float__(self):
        return float(self.rat) + float(self.irr) * self.n ** 0.5

    # printing

    def __repr__(self):
        return f"QuadScalar({str(self.rat)!r}, {str(self.irr)!r}, n={self.n})"

    def __str__(self):
        return format_scalar(self)


def _fmt_irr(q: Fraction, n: int) -> str:
    """Magnitude-only form of ``|q|*sqrt(n)``."""
    q = abs(q)
    root = f"sqrt({n})"
    if q == 1:
        return root
    return f"{q}*{root}"


def format_scalar(a: QuadScalar) -> str:
    """Canonical text: ``p``, ``p/q``, ``p/q*sqrt(n)`` and sums thereof."""
    p, q = a.rat, a.irr
    if not q:
        return str(p)
    irr = _fmt_irr(q, a.n)
    if not p:
        return irr if q > 0 else "-" + irr
    return f"{p} {'+' if q > 0 else '-'} {irr}"


def as_scalar(x) -> QuadScalar:
    if isinstance(x, QuadScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadScalar._make(Fraction(x), Fraction(0), _RADICAND)
    if isinstance(x, str):
        return QuadScalar.parse(x)
    raise TypeError(f"cannot convert {type(x).__name__} to QuadScalar")


ZERO = QuadScalar(0)
ONE = QuadScalar(1)
