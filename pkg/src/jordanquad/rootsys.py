"""Root systems of types A, B, C, D, F4 in standard coordinates.

Positive roots are enumerated explicitly (A: e_i - e_j; B: e_i, e_i +- e_j;
C: 2e_i, e_i +- e_j; D: e_i +- e_j; F4: the standard 48-vector model) with
Bourbaki simple-root numbering.  Parabolic dimensions come from
dim G/P_theta = #Phi+ - #Phi+(levi on Delta minus theta), computed by
expanding each positive root in the simple basis; Weyl orders use the
classical closed forms, with Levi orders multiplied over connected
components of the sub-diagram.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D", "F4"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "F4" and self.rank != 4:
            raise ValueError("F4 has rank 4")
        if self.family == "D" and self.rank < 2:
            raise ValueError("type D needs rank >= 2")
        if self.family in ("A", "B", "C") and self.rank < 1:
            raise ValueError("rank must be positive")

    def __repr__(self):
        return self.family if self.family == "F4" else f"{self.family}{self.rank}"


def _unit(dim, i, sign=1):
    v = [Fraction(0)] * dim
    v[i] = Fraction(sign)
    return v


def positive_roots(rs):
    fam, m = rs.family, rs.rank
    roots = []
    if fam == "A":
        dim = m + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                v = _unit(dim, i)
                v[j] = Fraction(-1)
                roots.append(tuple(v))
        return roots
    if fam in ("B", "C", "D"):
        for i in range(m):
            for j in range(i + 1, m):
                v = _unit(m, i)
                v[j] = Fraction(1)
                roots.append(tuple(v))
                v = _unit(m, i)
                v[j] = Fraction(-1)
                roots.append(tuple(v))
        if fam == "B":
            roots += [tuple(_unit(m, i)) for i in range(m)]
        elif fam == "C":
            roots += [tuple(_unit(m, i, 2)) for i in range(m)]
        return roots
    # F4: e_i; e_i +- e_j (i < j); (e_1 +- e_2 +- e_3 +- e_4)/2
    roots = [tuple(_unit(4, i)) for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            for s in (1, -1):
                v = _unit(4, i)
                v[j] = Fraction(s)
                roots.append(tuple(v))
    half = Fraction(1, 2)
    for s2 in (1, -1):
        for s3 in (1, -1):
            for s4 in (1, -1):
                roots.append((half, s2 * half, s3 * half, s4 * half))
    return roots


def simple_roots(rs):
    """Bourbaki numbering."""
    fam, m = rs.family, rs.rank
    if fam == "A":
        dim = m + 1
        out = []
        for i in range(m):
            v = _unit(dim, i)
            v[i + 1] = Fraction(-1)
            out.append(tuple(v))
        return out
    if fam in ("B", "C", "D"):
        out = []
        for i in range(m - 1):
            v = _unit(m, i)
            v[i + 1] = Fraction(-1)
            out.append(tuple(v))
        if fam == "B":
            out.append(tuple(_unit(m, m - 1)))
        elif fam == "C":
            out.append(tuple(_unit(m, m - 1, 2)))
        else:
            v = _unit(m, m - 2)
            v[m - 1] = Fraction(1)
            out.append(tuple(v))
        return out
    return [
        (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
        (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
        (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
    ]


def _solve_in_basis(basis, target):
    """Coefficients expressing target in a linearly independent basis
    (consistent, possibly overdetermined system), by exact elimination."""
    k = len(basis)
    dim = len(target)
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(dim)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, dim) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        coeffs[c] = rows[i][k]
    for i in range(r, dim):
        if rows[i][k]:
            raise ValueError("target not in the span of the basis")
    return coeffs


def _expansions(rs):
    """Each positive root as (root, support) where support is the set of
    simple-root indices (1-based) with nonzero coefficient."""
    simples = simple_roots(rs)
    out = []
    for root in positive_roots(rs):
        coeffs = _solve_in_basis(simples, root)
        support = frozenset(i + 1 for i, c in enumerate(coeffs) if c)
        out.append((root, support))
    return out


def positive_root_count(rs):
    return len(positive_roots(rs))


def _check_theta(rs, theta):
    theta = frozenset(theta)
    for i in theta:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise ValueError(f"node {i!r} is not in 1..{rs.rank}")
    return theta


def dim_g_mod_p(rs, theta):
    """dim G/P_theta = number of positive roots whose support meets theta.
    theta = all nodes is the Borel case (all positive roots); theta empty
    gives 0."""
    theta = _check_theta(rs, theta)
    return sum(1 for _, support in _expansions(rs) if support & theta)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _components(rs, nodes):
    """Connected components of the sub-diagram on the given nodes
    (adjacency = non-orthogonal simple roots)."""
    simples = simple_roots(rs)
    nodes = sorted(nodes)
    adj = {i: set() for i in nodes}
    for i in nodes:
        for j in nodes:
            if i < j and _dot(simples[i - 1], simples[j - 1]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    seen = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp = set()
        stack = [start]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _component_weyl_order(rank, pos_count):
    """Weyl order of a connected diagram from its rank and positive-root
    count; the (rank, count) pairs occurring for A/B/C/D/F4 sub-diagrams
    determine the order uniquely."""
    if pos_count == rank * (rank + 1) // 2:
        return math.factorial(rank + 1)
    if pos_count == rank * rank:
        return (1 << rank) * math.factorial(rank)
    if pos_count == rank * (rank - 1):
        return (1 << (rank - 1)) * math.factorial(rank)
    if (rank, pos_count) == (4, 24):
        return 1152
    raise ValueError(f"unrecognized component: rank {rank}, {pos_count} positive roots")


def weyl_order(rs, theta=None):
    """|W| for theta None; otherwise the Weyl order of the Levi on
    Delta minus theta (product over connected components)."""
    fam, m = rs.family, rs.rank
    if theta is None:
        if fam == "A":
            return math.factorial(m + 1)
        if fam in ("B", "C"):
            return (1 << m) * math.factorial(m)
        if fam == "D":
            return (1 << (m - 1)) * math.factorial(m)
        return 1152
    theta = _check_theta(rs, theta)
    nodes = set(range(1, m + 1)) - theta
    if not nodes:
        return 1
    expns = _expansions(rs)
    order = 1
    for comp in _components(rs, nodes):
        cnt = sum(1 for _, support in expns if support and support <= comp)
        order *= _component_weyl_order(len(comp), cnt)
    return order


def euler_characteristic(rs, theta):
    """chi(G/P_theta) = |W| / |W_Levi| (the Tate-class count of the split
    form)."""
    return weyl_order(rs) // weyl_order(rs, theta)


# ---------------------------------------------------------------------------
# The homogeneous spaces attached to the rank-one varieties


def xj_space(r, n):
    """(root system, theta) with X(J) = G/P_theta:
    r=0: a quadric for SO(n); r=1: flags of a line and a hyperplane for
    type A; r=2: the second symplectic Grassmannian; r=3: F4 node 4."""
    if r == 0:
        if n % 2 == 1:
            return RootSystem("B", (n - 1) // 2), {1}
        if n == 4:
            return RootSystem("D", 2), {1, 2}
        return RootSystem("D", n // 2), {1}
    if r == 1:
        return RootSystem("A", n - 1), {1, n - 1}
    if r == 2:
        return RootSystem("C", n), {2}
    if r == 3 and n == 3:
        return RootSystem("F4", 4), {4}
    raise ValueError(f"no homogeneous model for r={r}, n={n}")


def xj_euler_characteristic(r, n):
    rs, theta = xj_space(r, n)
    return euler_characteristic(rs, theta)


def z1_model_dim(r, n):
    """Dimension of the closed orbit underlying the base locus, from its
    homogeneous model: r=1: P^{n-2} (each of two components); r=2:
    P^1 x P^{2n-3}; r=3: the 10-dimensional spinor variety (B4, node 4)."""
    if r == 1:
        return dim_g_mod_p(RootSystem("A", n - 2), {1})
    if r == 2:
        return (dim_g_mod_p(RootSystem("A", 1), {1})
                + dim_g_mod_p(RootSystem("A", 2 * n - 3), {1}))
    if r == 3:
        return dim_g_mod_p(RootSystem("B", 4), {4})
    raise ValueError("the base locus is empty for r = 0")


@dataclass
class LineItem:
    item: str
    lhs: int
    rhs: int

    @property
    def ok(self):
        return self.lhs == self.rhs

    def as_dict(self):
        return {"item": self.item, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


def check_orbit_dims(r, n):
    """Line-item dimension checks for a configuration (r, n):

    * dim G/P_theta for the X(J) table equals 2^r (n-1) - 1;
    * the base-locus orbit dimension matches (n-2, 2n-2, 10 for r=1,2,3);
    * the parabolic-dimension arithmetic used in the orbit proofs
      (stabilizer dimension = dim G - orbit dimension, with the stated
      closed forms).
    """
    if r not in (0, 1, 2, 3) or n < 3 or (r == 3 and n != 3):
        raise ValueError(f"invalid configuration r={r}, n={n}")
    items = []
    rs, theta = xj_space(r, n)
    items.append(LineItem(f"dim X(J) = 2^{r}(n-1)-1 via {rs}/P{sorted(theta)}",
                          dim_g_mod_p(rs, theta), (1 << r) * (n - 1) - 1))
    if r == 1:
        items.append(LineItem("dim Z1 component = n-2",
                              z1_model_dim(1, n), n - 2))
        items.append(LineItem("stabilizer dim n^2-2n+2 = dim PGL(n) - (2n-3)",
                              n * n - 2 * n + 2, (n * n - 1) - (2 * n - 3)))
    if r == 2:
        items.append(LineItem("dim Z1 = 2n-2 via P^1 x P^(2n-3)",
                              z1_model_dim(2, n), 2 * n - 2))
        items.append(LineItem("stabilizer dim 2n^2-3n+5 = dim sp(2n) - (4n-5)",
                              2 * n * n - 3 * n + 5, n * (2 * n + 1) - (4 * n - 5)))
        items.append(LineItem(
            "Z1 stabilizer dim 2n^2-5n+6 = dim(sp(2n-2) x sl2) - (2n-2)",
            2 * n * n - 5 * n + 6, (n - 1) * (2 * n - 1) + 3 - (2 * n - 2)))
    if r == 3:
        items.append(LineItem("dim Z1 = 10, the spinor variety B4/P4",
                              z1_model_dim(3, n), 10))
    if r == 0 and n % 2 == 0:
        m = n // 2
        items.append(LineItem("stabilizer dim 2m^2-3m+2 = dim so(2m) - (n-2)",
                              2 * m * m - 3 * m + 2, m * (2 * m - 1) - (n - 2)))
    return items
