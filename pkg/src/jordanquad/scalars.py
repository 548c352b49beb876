"""Exact scalar arithmetic over Q and over odd prime fields F_p.

Scalars over Q are plain ``fractions.Fraction`` values (always canonically
reduced).  Scalars over F_p are ``FpElem`` wrappers around a residue in
[0, p); the wrapper exists so that generic code can use ordinary arithmetic
operators over either field.  Characteristic 2 is rejected: everything
downstream divides by 2.

Square classes get canonical representatives: over F_p either 1 or a fixed
least non-residue, over Q a square-free integer with sign.  Discriminants
and Hilbert-symbol bookkeeping rely on these canonical forms.
"""

import math
from fractions import Fraction

from .errors import FieldMismatchError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FpElem:
    """A residue modulo an odd prime, with field arithmetic."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        """Residue of a compatible operand; FieldMismatchError across
        fields, None for foreign types (so reflected dunders get a turn)."""
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot mix F_{self.p} with a rational")
        return None

    def __add__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return FpElem(self.p, self.v + w)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return FpElem(self.p, self.v - w)

    def __rsub__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return FpElem(self.p, w - self.v)

    def __mul__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        return FpElem(self.p, self.v * w)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        if w == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElem(self.p, self.v * pow(w, self.p - 2, self.p))

    def __rtruediv__(self, other):
        w = self._lift(other)
        if w is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElem(self.p, w * pow(self.v, self.p - 2, self.p))

    def __neg__(self):
        return FpElem(self.p, -self.v)

    def __pow__(self, k):
        if k < 0:
            return FpElem(self.p, 1) / self ** (-k)
        return FpElem(self.p, pow(self.v, k, self.p))

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


class Rationals:
    """The rational field; scalars are Fractions."""

    kind = "Q"
    characteristic = 0

    def element(self, x):
        """Coerce ints, strings like '3/4', and Fractions to a Fraction."""
        if isinstance(x, FpElem):
            raise FieldMismatchError("got an F_p residue where a rational was expected")
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_square(self, a):
        """a = s^2 for rational s?  Tests numerator and denominator for
        integer squares; raises on zero input (0 has no square class)."""
        a = self.element(a)
        if a == 0:
            raise ValueError("is_square: zero input")
        if a < 0:
            return False
        return (math.isqrt(a.numerator) ** 2 == a.numerator
                and math.isqrt(a.denominator) ** 2 == a.denominator)

    def square_class(self, a):
        """Canonical representative of a modulo squares: a signed
        square-free integer, as a Fraction."""
        a = self.element(a)
        if a == 0:
            raise ValueError("square_class: zero input")
        n = abs(a.numerator) * a.denominator
        sf = 1
        d = 2
        while d * d <= n:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    n //= d
                    e += 1
                if e % 2:
                    sf *= d
            d += 1 if d == 2 else 2
        sf *= n
        return Fraction(sf if a > 0 else -sf)

    def same_square_class(self, a, b):
        return self.square_class(a) == self.square_class(b)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """F_p for an odd prime p; scalars are FpElem residues."""

    kind = "Fp"

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p = {p!r} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p
        self.characteristic = p

    def element(self, x):
        if isinstance(x, FpElem):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return FpElem(self.p, x)
        if isinstance(x, str):
            return FpElem(self.p, int(x))
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return FpElem(self.p, x.numerator) / x.denominator
        raise TypeError(f"cannot coerce {type(x).__name__} into F_{self.p}")

    def zero(self):
        return FpElem(self.p, 0)

    def one(self):
        return FpElem(self.p, 1)

    def is_square(self, a):
        """Euler criterion a^((p-1)/2) = 1."""
        a = self.element(a)
        if a.v == 0:
            raise ValueError("is_square: zero input")
        return pow(a.v, (self.p - 1) // 2, self.p) == 1

    def least_nonresidue(self):
        for u in range(2, self.p):
            if pow(u, (self.p - 1) // 2, self.p) == self.p - 1:
                return u
        raise AssertionError("no non-residue found; p is not an odd prime")

    def square_class(self, a):
        a = self.element(a)
        if a.v == 0:
            raise ValueError("square_class: zero input")
        return self.one() if self.is_square(a) else FpElem(self.p, self.least_nonresidue())

    def same_square_class(self, a, b):
        return self.square_class(a) == self.square_class(b)

    def elements(self):
        return [FpElem(self.p, v) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


def field_from_spec(kind, p=None):
    """Build a field from config data: kind 'Q' or 'Fp' (p required)."""
    if kind == "Q":
        return Rationals()
    if kind == "Fp":
        if p is None:
            raise ValueError("field 'Fp' requires p")
        return PrimeField(p)
    raise ValueError(f"unknown field kind {kind!r}")
