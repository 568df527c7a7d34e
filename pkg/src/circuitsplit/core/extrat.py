"""Exact rationals extended with +inf and -inf.

Finite values are backed by :class:`fractions.Fraction`.  Operations whose
value is undefined on the extended line (``inf - inf``, ``0 * inf``,
``inf / inf``) raise :class:`UndefinedOperation` instead of producing a NaN.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import UndefinedOperation

__all__ = ["ExtRat", "INF", "NEG_INF", "ZERO", "ONE", "to_ext"]


class ExtRat:
    """An exact rational, or one of the sentinels +inf / -inf."""

    __slots__ = ("_q", "_inf")

    def __init__(self, value=0):
        if isinstance(value, ExtRat):
            self._q, self._inf = value._q, value._inf
            return
        if isinstance(value, str):
            s = value.strip().lower()
            if s in ("inf", "+inf", "infinity", "+infinity", "∞"):
                self._q, self._inf = None, 1
                return
            if s in ("-inf", "-infinity", "-∞"):
                self._q, self._inf = None, -1
                return
            try:
                self._q, self._inf = Fraction(s), 0
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"not an exact rational: {value!r}") from exc
            return
        if isinstance(value, bool):
            raise TypeError("booleans are not rationals")
        if isinstance(value, (int, Rational)):
            self._q, self._inf = Fraction(value), 0
            return
        if isinstance(value, float):
            # only the infinities survive; finite floats are inexact
            if value == float("inf"):
                self._q, self._inf = None, 1
                return
            if value == float("-inf"):
                self._q, self._inf = None, -1
                return
        raise TypeError(f"cannot build an exact ExtRat from {value!r}")

    @classmethod
    def inf(cls, sign: int = 1) -> "ExtRat":
        out = cls.__new__(cls)
        out._q, out._inf = None, (1 if sign > 0 else -1)
        return out

    # -- inspection ---------------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self._inf == 0

    @property
    def is_inf(self) -> bool:
        return self._inf != 0

    @property
    def sign(self) -> int:
        if self._inf:
            return self._inf
        return (self._q > 0) - (self._q < 0)

    def fraction(self) -> Fraction:
        if self._inf:
            raise UndefinedOperation("infinite value has no Fraction form")
        return self._q

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        if self._inf:
            return ExtRat.inf(-self._inf)
        return ExtRat(-self._q)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign < 0 else self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._inf and other._inf:
            if self._inf != other._inf:
                raise UndefinedOperation("inf - inf is undefined")
            return self
        if self._inf:
            return self
        if other._inf:
            return other
        return ExtRat(self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._inf or other._inf:
            s = self.sign * other.sign
            if s == 0:
                raise UndefinedOperation("0 * inf is undefined")
            return ExtRat.inf(s)
        return ExtRat(self._q * other._q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other._inf:
            if self._inf:
                raise UndefinedOperation("inf / inf is undefined")
            return ZERO
        if other._q == 0:
            raise ZeroDivisionError("division by zero; use reciprocal() for 1/0 = inf")
        if self._inf:
            return ExtRat.inf(self._inf * other.sign)
        return ExtRat(self._q / other._q)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def reciprocal(self) -> "ExtRat":
        """Conductance/resistance conversion: 1/0 = inf and 1/inf = 0."""
        if self._inf:
            return ZERO
        if self._q == 0:
            return INF
        return ExtRat(1 / self._q)

    # -- comparison ---------------------------------------------------------
    def _key(self):
        return (self._inf, self._q if self._q is not None else 0)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._inf == other._inf and self._q == other._q

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() < other._key()

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() <= other._key()

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() > other._key()

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() >= other._key()

    def __hash__(self):
        if self._inf:
            return hash(float("inf") * self._inf)
        return hash(self._q)

    def __bool__(self):
        return self._inf != 0 or self._q != 0

    def __str__(self):
        if self._inf:
            return "inf" if self._inf > 0 else "-inf"
        return str(self._q)

    def __repr__(self):
        return f"ExtRat({str(self)!r})"


def _coerce(value):
    if isinstance(value, ExtRat):
        return value
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, (int, Rational)):
        return ExtRat(value)
    if isinstance(value, float) and value in (float("inf"), float("-inf")):
        return ExtRat(value)
    return NotImplemented


def to_ext(value) -> ExtRat:
    return value if isinstance(value, ExtRat) else ExtRat(value)


INF = ExtRat.inf(1)
NEG_INF = ExtRat.inf(-1)
ZERO = ExtRat(0)
ONE = ExtRat(1)
