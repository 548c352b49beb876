"""Reduced Jordan algebras Sym(M_n(C), sigma_b) of sigma_b-symmetric matrices.

Here C is a composition algebra, Gamma = diag(b_1, ..., b_n) with all b_i
nonzero, and sigma_b(x) = Gamma^{-1} conj(x)^t Gamma.  The product is
x o y = (xy + yx)/2.  For dim C = 8 the matrix algebra is Jordan only in
size n = 3, so that restriction is enforced at construction.

The k-dimension of the symmetric space is 2^{r-1} n(n-1) + n: n scalar
diagonal slots plus a full copy of C per strict-upper-triangle slot (the
lower triangle is determined by symmetry).
"""

from fractions import Fraction

from .cayley_dickson import CDAlgebra, CDElem
from .errors import AlgebraMismatchError


class JordanAlgebra:
    """Parameters (C, n, b) of Sym(M_n(C), sigma_b), with cached bases."""

    def __init__(self, cd, b):
        if not isinstance(cd, CDAlgebra):
            raise TypeError("cd must be a CDAlgebra")
        b = tuple(cd.field.element(x) for x in b)
        if len(b) < 3:
            raise ValueError("need n >= 3")
        if any(not x for x in b):
            raise ValueError("b must have nonzero entries")
        if cd.r == 3 and len(b) != 3:
            raise ValueError("octonion coordinates require n = 3")
        self.cd = cd
        self.field = cd.field
        self.b = b
        self.n = len(b)
        self.half = self.field.element(Fraction(1, 2))
        self._basis = None

    @property
    def dim(self):
        n, r = self.n, self.cd.r
        return (1 << r) * n * (n - 1) // 2 + n

    def swap_last_two(self):
        """The algebra with b_{n-1} and b_n exchanged (same C)."""
        b = self.b[:-2] + (self.b[-1], self.b[-2])
        return JordanAlgebra(self.cd, b)

    # -- element constructors -------------------------------------------------

    def element(self, entries, validate=True):
        """Wrap an n x n matrix of CDElems (or coordinate lists)."""
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                e = entries[i][j]
                if not isinstance(e, CDElem):
                    e = self.cd.element(e)
                elif e.algebra != self.cd:
                    raise AlgebraMismatchError("entry from a different composition algebra")
                row.append(e)
            rows.append(tuple(row))
        x = JordanElem(self, tuple(rows))
        if validate and not x.is_symmetric():
            raise ValueError("matrix is not sigma_b-symmetric")
        return x

    def from_parts(self, diag, upper):
        """Element from its independent entries: n diagonal scalars and a
        map (i, j) -> CDElem for i < j; the lower triangle is filled in by
        x_ji = (b_i / b_j) conj(x_ij)."""
        n = self.n
        diag = [self.field.element(d) for d in diag]
        if len(diag) != n:
            raise ValueError(f"need {n} diagonal scalars")
        rows = [[self.cd.zero() for _ in range(n)] for _ in range(n)]
        for i in range(n):
            rows[i][i] = self.cd.from_scalar(diag[i])
        for (i, j), e in upper.items():
            if not 0 <= i < j < n:
                raise ValueError(f"({i}, {j}) is not a strict upper index")
            if not isinstance(e, CDElem):
                e = self.cd.element(e)
            rows[i][j] = e
            rows[j][i] = (self.b[i] / self.b[j]) * e.conj()
        return self.element(rows, validate=False)

    def zero(self):
        return self.from_parts([0] * self.n, {})

    def identity(self):
        return self.from_parts([1] * self.n, {})

    def basis_idempotent(self, i):
        """E_ii, a primitive diagonal idempotent."""
        return self.from_parts([1 if t == i else 0 for t in range(self.n)], {})

    def basis(self):
        """A fixed k-basis: the E_ii, then for each i < j every CD basis
        element placed in slot (i, j).  Length 2^{r-1} n(n-1) + n."""
        if self._basis is None:
            out = [self.basis_idempotent(i) for i in range(self.n)]
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    for t in range(self.cd.dim):
                        out.append(self.from_parts([0] * self.n,
                                                   {(i, j): self.cd.basis(t)}))
            self._basis = tuple(out)
        return self._basis

    def peirce_half_basis(self, u_index=None):
        """k-basis of the eigenspace J_{1/2}(E_ii) = {x : x o E_ii = x/2},
        the matrices supported on row/column i off the diagonal; size
        2^r (n-1)."""
        i = self.n - 1 if u_index is None else u_index
        if not 0 <= i < self.n:
            raise ValueError("idempotent index out of range")
        out = []
        for j in range(self.n):
            if j == i:
                continue
            lo, hi = min(i, j), max(i, j)
            for t in range(self.cd.dim):
                out.append(self.from_parts([0] * self.n, {(lo, hi): self.cd.basis(t)}))
        return out

    def half_space_element(self, cvec, u_index=None):
        """The element of J_{1/2}(E_ii) whose column i is the given vector
        of C-coordinates (listed over the rows j != i, in order)."""
        i = self.n - 1 if u_index is None else u_index
        cvec = list(cvec)
        if len(cvec) != self.n - 1:
            raise ValueError(f"need {self.n - 1} coordinates")
        rows = [[self.cd.zero() for _ in range(self.n)] for _ in range(self.n)]
        others = [j for j in range(self.n) if j != i]
        for j, c in zip(others, cvec):
            if not isinstance(c, CDElem):
                c = self.cd.element(c)
            rows[j][i] = c
            rows[i][j] = (self.b[j] / self.b[i]) * c.conj()
        return self.element(rows, validate=False)

    def __eq__(self, other):
        return (isinstance(other, JordanAlgebra) and other.cd == self.cd
                and other.b == self.b)

    def __hash__(self):
        return hash((self.cd, self.b))

    def __repr__(self):
        return f"Jordan(n={self.n}, r={self.cd.r}, b={list(self.b)})"


class JordanElem:
    """A sigma_b-symmetric n x n matrix over the composition algebra."""

    __slots__ = ("algebra", "entries")

    def __init__(self, algebra, entries):
        self.algebra = algebra
        self.entries = entries

    def _check(self, other):
        if not isinstance(other, JordanElem) or other.algebra != self.algebra:
            raise AlgebraMismatchError("elements of different Jordan algebras")

    def is_symmetric(self):
        """sigma_b(x) = x, i.e. x_ij = (b_j / b_i) conj(x_ji) for all i, j."""
        b = self.algebra.b
        n = self.algebra.n
        for i in range(n):
            for j in range(n):
                if self.entries[i][j] != (b[j] / b[i]) * self.entries[j][i].conj():
                    return False
        return True

    def _matmul(self, other):
        n = self.algebra.n
        cd = self.algebra.cd
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = cd.zero()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return rows

    def jordan_mul(self, other):
        """x o y = (xy + yx)/2; commutative, symmetry-preserving."""
        self._check(other)
        xy = self._matmul(other)
        yx = other._matmul(self)
        half = self.algebra.half
        rows = tuple(tuple(half * (a + b) for a, b in zip(r1, r2))
                     for r1, r2 in zip(xy, yx))
        return JordanElem(self.algebra, rows)

    def __add__(self, other):
        self._check(other)
        rows = tuple(tuple(a + b for a, b in zip(r1, r2))
                     for r1, r2 in zip(self.entries, other.entries))
        return JordanElem(self.algebra, rows)

    def __sub__(self, other):
        self._check(other)
        rows = tuple(tuple(a - b for a, b in zip(r1, r2))
                     for r1, r2 in zip(self.entries, other.entries))
        return JordanElem(self.algebra, rows)

    def __neg__(self):
        return JordanElem(self.algebra,
                          tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, s):
        s = self.algebra.field.element(s)
        return JordanElem(self.algebra,
                          tuple(tuple(s * a for a in row) for row in self.entries))

    def __rmul__(self, s):
        return self.scale(s)

    def trace(self):
        """Sum of the (scalar) diagonal entries, as a field scalar."""
        total = self.algebra.field.zero()
        for i in range(self.algebra.n):
            total = total + self.entries[i][i].scalar_part()
        return total

    def trace_form(self, other):
        """tau(x, y) = trace(x o y), a symmetric bilinear form."""
        return self.jordan_mul(other).trace()

    def square(self):
        return self.jordan_mul(self)

    def u_operator(self, y):
        """U_x y = 2 x o (x o y) - (x o x) o y."""
        self._check(y)
        a = self.jordan_mul(self.jordan_mul(y)).scale(2)
        return a - self.square().jordan_mul(y)

    def is_rank_one(self):
        """U_x y = tau(x, y) x for every y in a fixed k-basis of J.

        This pins the usual rank-one notion (U_x J is the line through x)
        with the scalar forced by the trace form; cross-validated against
        the cubic adjoint for n = 3.
        """
        if self.is_zero():
            raise ValueError("rank of the zero element is undefined")
        for y in self.algebra.basis():
            if self.u_operator(y) != self.scale(self.trace_form(y)):
                return False
        return True

    def adjoint_sharp(self):
        """Cubic adjoint x^# = x^2 - T(x) x + ((T(x)^2 - T(x^2))/2) 1; the
        rank-one locus for n = 3 is exactly x^# = 0."""
        if self.algebra.n != 3:
            raise ValueError("the cubic adjoint needs n = 3")
        x2 = self.square()
        t, t2 = self.trace(), x2.trace()
        half = self.algebra.half
        const = half * (t * t - t2)
        return x2 - self.scale(t) + self.algebra.identity().scale(const)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.algebra.n))

    def is_zero(self):
        return all(not e for row in self.entries for e in row)

    def flatten(self):
        """All CD coordinates in row-major entry order (for scaling and
        canonical forms)."""
        return [c for row in self.entries for e in row for c in e.coords]

    def __eq__(self, other):
        if not isinstance(other, JordanElem):
            return NotImplemented
        return self.algebra == other.algebra and self.entries == other.entries

    def __hash__(self):
        return hash((self.algebra, self.entries))

    def __repr__(self):
        return "[" + "; ".join(", ".join(repr(e) for e in row)
                               for row in self.entries) + "]"
