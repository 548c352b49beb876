"""Composition algebras of dimension 2^r (r <= 3) by Cayley-Dickson doubling.

An algebra is determined by a base field and doubling parameters
a_1, ..., a_r; its norm form is the Pfister form <<a_1, ..., a_r>> on the
doubling basis e_0, ..., e_{2^r - 1}, slot by slot.  Doubling multiplies
pairs by (a, b)(c, d) = (ac + lam * conj(d) b, da + b conj(c)) with
lam = a_level, which makes e_level^2 = a_level.

Basis products are monomial, e_i e_j = gamma(i, j) e_{i XOR j}, so each
algebra carries a structure-constant table computed once and shared.
Split algebras (isotropic norm) are fully supported; zero divisors are
expected over F_p for r >= 2.
"""

from .errors import AlgebraMismatchError
from .quadform import pfister


def _conj_rec(x):
    return (x[0],) + tuple(-c for c in x[1:])


def _mul_rec(x, y, params, field):
    if not params:
        return (x[0] * y[0],)
    half = len(x) // 2
    lam = params[-1]
    sub = params[:-1]
    a, b = x[:half], x[half:]
    c, d = y[:half], y[half:]
    ac = _mul_rec(a, c, sub, field)
    db = _mul_rec(_conj_rec(d), b, sub, field)
    da = _mul_rec(d, a, sub, field)
    bc = _mul_rec(b, _conj_rec(c), sub, field)
    return (tuple(p + lam * q for p, q in zip(ac, db))
            + tuple(p + q for p, q in zip(da, bc)))


class CDAlgebra:
    """A 2^r-dimensional composition algebra over an exact field."""

    def __init__(self, field, params):
        params = tuple(field.element(a) for a in params)
        if len(params) > 3:
            raise ValueError("composition algebras exist only for r <= 3")
        if any(not a for a in params):
            raise ValueError("doubling parameters must be nonzero")
        self.field = field
        self.params = params
        self.r = len(params)
        self.dim = 1 << self.r
        self.norm_form = pfister(field, params)
        self._gamma = self._build_table()

    def _build_table(self):
        """gamma[i][j] with e_i e_j = gamma[i][j] e_{i^j}, from the
        recursive doubling product on basis tuples."""
        m = self.dim
        zero, one = self.field.zero(), self.field.one()
        gamma = [[zero] * m for _ in range(m)]
        for i in range(m):
            ei = tuple(one if t == i else zero for t in range(m))
            for j in range(m):
                ej = tuple(one if t == j else zero for t in range(m))
                prod = _mul_rec(ei, ej, self.params, self.field)
                k = i ^ j
                for t, c in enumerate(prod):
                    if t != k and c:
                        raise AssertionError("doubling product is not monomial")
                gamma[i][j] = prod[k]
        return gamma

    # -- element constructors -------------------------------------------------

    def element(self, coords):
        coords = tuple(self.field.element(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return CDElem(self, coords)

    def zero(self):
        return self.element([0] * self.dim)

    def one(self):
        return self.element([1] + [0] * (self.dim - 1))

    def basis(self, i):
        if not 0 <= i < self.dim:
            raise ValueError(f"basis index {i} out of range")
        return self.element([1 if t == i else 0 for t in range(self.dim)])

    def from_scalar(self, s):
        return self.element([s] + [0] * (self.dim - 1))

    def table_json(self):
        """Basis multiplication table, JSON-friendly."""
        return [[{"index": i ^ j, "coef": str(self._gamma[i][j])}
                 for j in range(self.dim)] for i in range(self.dim)]

    def __eq__(self, other):
        return (isinstance(other, CDAlgebra) and other.field == self.field
                and other.params == self.params)

    def __hash__(self):
        return hash((self.field, self.params))

    def __repr__(self):
        return f"CD({self.field}, r={self.r}, a={list(self.params)})"


class CDElem:
    """An element of a CDAlgebra; immutable coordinates in the doubling basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, CDElem):
            raise TypeError(f"cannot combine CDElem with {type(other).__name__}")
        if other.algebra != self.algebra:
            raise AlgebraMismatchError("elements of different composition algebras")

    def __add__(self, other):
        self._check(other)
        return CDElem(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return CDElem(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CDElem(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if not isinstance(other, CDElem):
            # scalar action
            s = self.algebra.field.element(other)
            return CDElem(self.algebra, tuple(s * a for a in self.coords))
        self._check(other)
        alg = self.algebra
        m = alg.dim
        gamma = alg._gamma
        out = [alg.field.zero()] * m
        for i, xi in enumerate(self.coords):
            if not xi:
                continue
            row = gamma[i]
            for j, yj in enumerate(other.coords):
                if yj:
                    out[i ^ j] = out[i ^ j] + xi * yj * row[j]
        return CDElem(alg, tuple(out))

    def __rmul__(self, other):
        s = self.algebra.field.element(other)
        return CDElem(self.algebra, tuple(s * a for a in self.coords))

    def conj(self):
        return CDElem(self.algebra, _conj_rec(self.coords))

    def norm(self):
        """N(x), the Pfister norm form evaluated on the coordinates; equals
        the e_0 part of x * conj(x)."""
        f = self.algebra.norm_form
        total = self.algebra.field.zero()
        for d, c in zip(f.coeffs, self.coords):
            total = total + d * c * c
        return total

    def trace(self):
        """t(x) with x + conj(x) = t(x) e_0."""
        return self.coords[0] + self.coords[0]

    def scalar_part(self):
        return self.coords[0]

    def is_scalar(self):
        return all(not c for c in self.coords[1:])

    def __eq__(self, other):
        if not isinstance(other, CDElem):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if c:
                parts.append(str(c) if i == 0 else f"{c}*e{i}")
        return " + ".join(parts) if parts else "0"
