import random
from fractions import Fraction

import pytest

from jordanquad.cayley_dickson import CDAlgebra
from jordanquad.errors import AlgebraMismatchError
from jordanquad.jordan import JordanAlgebra
from jordanquad.scalars import PrimeField, Rationals

Q = Rationals()


def make_alg(r=2, n=3, b=(1, 1, -3), field=Q, params=None):
    if params is None:
        params = [-1] * r
    return JordanAlgebra(CDAlgebra(field, params), b)


def random_element(alg, rng, lo=-3, hi=3):
    diag = [rng.randint(lo, hi) for _ in range(alg.n)]
    upper = {}
    for i in range(alg.n):
        for j in range(i + 1, alg.n):
            upper[(i, j)] = alg.cd.element([rng.randint(lo, hi)
                                            for _ in range(alg.cd.dim)])
    return alg.from_parts(diag, upper)


def test_construction_constraints():
    with pytest.raises(ValueError):
        JordanAlgebra(CDAlgebra(Q, [-1, -1, -1]), (1, 1, 1, 1))  # r=3 needs n=3
    with pytest.raises(ValueError):
        make_alg(b=(1, 0, 1))
    with pytest.raises(ValueError):
        JordanAlgebra(CDAlgebra(Q, []), (1, 1))  # n >= 3


def test_dimension_formula_by_basis():
    for r, n in [(0, 3), (0, 5), (1, 3), (1, 4), (2, 3), (2, 4), (3, 3)]:
        alg = make_alg(r=r, n=n, b=tuple(range(1, n + 1)))
        # 2^{r-1} n (n-1) + n, which at r = 0 reads n(n-1)/2 + n
        assert alg.dim == (1 << r) * n * (n - 1) // 2 + n
        basis = alg.basis()
        assert len(basis) == alg.dim
        # basis elements are symmetric and k-linearly independent by slots
        assert all(x.is_symmetric() for x in basis)


def test_idempotent_products():
    alg = make_alg()
    E11, E22 = alg.basis_idempotent(0), alg.basis_idempotent(1)
    assert E11.jordan_mul(E11) == E11
    assert E11.jordan_mul(E22).is_zero()
    x = random_element(alg, random.Random(5))
    assert alg.identity().jordan_mul(x) == x


def test_commutativity_and_symmetry_closure():
    alg = make_alg(r=2, n=4, b=(1, 2, 3, -1))
    rng = random.Random(7)
    for _ in range(10):
        x, y = random_element(alg, rng), random_element(alg, rng)
        xy = x.jordan_mul(y)
        assert xy == y.jordan_mul(x)
        assert xy.is_symmetric()


def test_jordan_identity():
    # x^2 o (x o y) = x o (x^2 o y), including the octonion case
    for r, n in [(0, 3), (1, 3), (2, 3), (2, 4), (3, 3)]:
        alg = make_alg(r=r, n=n, b=tuple([1] * (n - 1) + [-3]))
        rng = random.Random(100 + r + n)
        for _ in range(6 if r < 3 else 4):
            x, y = random_element(alg, rng, -2, 2), random_element(alg, rng, -2, 2)
            x2 = x.square()
            assert x2.jordan_mul(x.jordan_mul(y)) == x.jordan_mul(x2.jordan_mul(y))


def test_u_operator_examples():
    alg = make_alg()
    E11, E22 = alg.basis_idempotent(0), alg.basis_idempotent(1)
    I = alg.identity()
    assert E11.u_operator(I) == E11
    x = random_element(alg, random.Random(9))
    assert I.u_operator(x) == x
    assert E11.u_operator(E22).is_zero()


def test_trace_examples():
    alg = make_alg()
    I = alg.identity()
    E11, E22 = alg.basis_idempotent(0), alg.basis_idempotent(1)
    assert I.trace() == 3
    assert (E11 - E22).trace() == 0
    assert E11.trace_form(E11) == 1


def test_trace_form_associative():
    alg = make_alg(r=1, n=4, b=(1, 2, -1, 3))
    rng = random.Random(13)
    for _ in range(8):
        x, y, z = (random_element(alg, rng) for _ in range(3))
        assert x.jordan_mul(y).trace_form(z) == x.trace_form(y.jordan_mul(z))


def test_rank_one_examples():
    alg = make_alg()
    E11, E22 = alg.basis_idempotent(0), alg.basis_idempotent(1)
    assert E11.is_rank_one()
    assert not (E11 + E22).is_rank_one()
    with pytest.raises(ValueError):
        alg.zero().is_rank_one()


def test_adjoint_examples():
    alg = make_alg()
    E11, E22, E33 = (alg.basis_idempotent(i) for i in range(3))
    I = alg.identity()
    assert E11.adjoint_sharp().is_zero()
    assert I.adjoint_sharp() == I
    assert (E11 + E22).adjoint_sharp() == E33
    alg4 = make_alg(r=1, n=4, b=(1, 1, 1, 1))
    with pytest.raises(ValueError):
        alg4.identity().adjoint_sharp()


def test_rank_one_iff_sharp_zero():
    """On a mixed bag of elements of a cubic algebra the two rank-one
    detectors agree."""
    for field, params, b in [(Q, [-1, -1], (1, 1, -3)),
                             (PrimeField(7), [1, 1], (1, 2, 6)),
                             (Q, [-1, -1, -1], (1, 2, -3))]:
        alg = JordanAlgebra(CDAlgebra(field, [field.element(a) for a in params]),
                            [field.element(x) for x in b])
        rng = random.Random(17)
        checked = 0
        for _ in range(12):
            x = random_element(alg, rng, -2, 2)
            if x.is_zero():
                continue
            assert x.is_rank_one() == x.adjoint_sharp().is_zero()
            checked += 1
        # idempotents are rank one; their sharp vanishes
        for i in range(3):
            e = alg.basis_idempotent(i)
            assert e.is_rank_one() and e.adjoint_sharp().is_zero()
        assert checked >= 8


def test_peirce_half_basis():
    alg0 = make_alg(r=0, n=3, b=(1, 1, 1))
    assert len(alg0.peirce_half_basis()) == 2
    alg2 = make_alg(r=2, n=3)
    basis = alg2.peirce_half_basis()
    assert len(basis) == 8
    u = alg2.basis_idempotent(2)
    half = Fraction(1, 2)
    for x in basis:
        assert x.jordan_mul(u) == x.scale(half)
    with pytest.raises(ValueError):
        alg2.peirce_half_basis(5)


def test_half_space_element_column():
    alg = make_alg(r=1, n=4, b=(1, 2, 3, -1))
    cd = alg.cd
    cvec = [cd.element([1, 2]), cd.element([0, 1]), cd.element([3, 0])]
    x = alg.half_space_element(cvec)
    col = x.column(3)
    assert list(col[:3]) == cvec
    assert x.jordan_mul(alg.basis_idempotent(3)) == x.scale(Fraction(1, 2))


def test_spec_mismatch():
    a1, a2 = make_alg(), make_alg(b=(1, 1, 1))
    with pytest.raises(AlgebraMismatchError):
        a1.identity().jordan_mul(a2.identity())


def test_nonsymmetric_rejected():
    alg = make_alg(r=1, n=3, b=(1, 1, 1))
    cd = alg.cd
    rows = [[cd.one(), cd.basis(1), cd.zero()],
            [cd.basis(1), cd.one(), cd.zero()],
            [cd.zero(), cd.zero(), cd.one()]]
    # e1 in slot (0,1) forces -e1 in slot (1,0) when b = (1,1,1)
    with pytest.raises(ValueError):
        alg.element(rows)
