import pytest

from jordanquad.errors import NegativeCoefficientError
from jordanquad.motives import (F, MotiveExpr, R, Summand, TateProfile,
                                codim_z1, decompose_neighbour_quadric,
                                decompose_pfister_multiple, decompose_xj,
                                decompose_z1, pfister_quadric_expr,
                                poincare_xj_recursive, split_quadric,
                                verify_blowup, verify_krashen)
from jordanquad import rootsys


def split_quadric_profile(D):
    """Independent oracle: Tate multiset of a split D-dimensional quadric."""
    out = list(range(D + 1))
    if D % 2 == 0:
        out.append(D // 2)
    return TateProfile(out)


# -- profiles ---------------------------------------------------------------

def test_profile_examples():
    assert F(2, 4).profile().as_multiset() == [0, 4, 7, 11]
    assert R(2, 5).profile().as_multiset() == [5, 6]
    assert F(1, 1).profile().total() == 0
    assert R(1).profile().as_multiset() == [0, 0]
    assert split_quadric(2).profile().as_multiset() == [0, 1, 1, 2]
    assert Summand("Tate", twist=3).profile().as_multiset() == [3]


def test_count_law():
    for r in (1, 2, 3):
        for n in range(1, 9):
            assert F(r, n).profile().total() == 2 * (n // 2)


def test_profile_operations():
    p = TateProfile([0, 1, 1])
    assert (p + p.shift(2)).as_multiset() == [0, 1, 1, 2, 3, 3]
    assert p.shift(1).eval_at(3) == 3 + 9 + 9
    with pytest.raises(NegativeCoefficientError):
        TateProfile([0]).subtract(TateProfile([1]))
    assert TateProfile([0, 1, 1, 2]).is_palindromic()
    assert not TateProfile([0, 1, 1]).is_palindromic()


def test_invalid_summands():
    with pytest.raises(ValueError):
        F(0, 3)
    with pytest.raises(ValueError):
        R(0)
    with pytest.raises(ValueError):
        Summand("X")
    with pytest.raises(ValueError):
        F(1, 3, twist=-1)


# -- decompositions ---------------------------------------------------------

def test_pfister_multiple_examples():
    e = decompose_pfister_multiple(1, 2)
    assert e == MotiveExpr([F(1, 2, 0), F(1, 2, 1)])
    e23 = decompose_pfister_multiple(2, 3)
    assert e23 == MotiveExpr([F(2, 3, i) for i in range(4)] + [R(2, 4), R(2, 5)])
    for r in (1, 2, 3):
        for n in range(1, 8):
            prof = decompose_pfister_multiple(r, n).profile()
            assert prof.total() == (1 << r) * n
            assert prof == split_quadric_profile((1 << r) * n - 2)


def test_neighbour_quadric_examples():
    e = decompose_neighbour_quadric(2, 4)
    assert e == MotiveExpr([F(2, 4)] + [F(2, 3, i) for i in (1, 2, 3)] + [R(2, 5)])
    assert len(e) == 5
    e22 = decompose_neighbour_quadric(2, 2)
    assert e22 == MotiveExpr([F(2, 2)] + [F(2, 1, i) for i in (1, 2, 3)] + [R(2, 1)])
    assert e22.profile().as_multiset() == [0, 1, 2, 3]
    for r in (1, 2, 3):
        for n in range(2, 8):
            if r == 3 and n > 3:
                prof = decompose_neighbour_quadric(r, n).profile()
            else:
                prof = decompose_neighbour_quadric(r, n).profile()
            assert prof == split_quadric_profile((1 << r) * (n - 1) - 1)


def test_z1_examples():
    assert decompose_z1(0, 5) == MotiveExpr()
    z23 = decompose_z1(2, 3)
    assert z23 == MotiveExpr([R(2, i) for i in range(4)])
    # oracle: the Poincare multiset of P^1 x P^3
    p1 = TateProfile([0, 1])
    p3 = TateProfile([0, 1, 2, 3])
    product = TateProfile([a + b for a in p1.as_multiset() for b in p3.as_multiset()])
    assert z23.profile() == product
    z33 = decompose_z1(3, 3).profile()
    assert z33.total() == 16 and z33.max_degree() == 10
    z13 = decompose_z1(1, 3)
    assert z13 == MotiveExpr([R(1, 0), R(1, 1)])
    assert z13.profile().as_multiset() == [0, 0, 1, 1]  # two disjoint P^1
    with pytest.raises(ValueError):
        decompose_z1(3, 4)


def test_xj_examples():
    assert decompose_xj(2, 3) == MotiveExpr([F(2, 3)] + [R(2, i) for i in range(1, 6)])
    assert decompose_xj(2, 3).profile().coefficients() == [1, 1, 2, 2, 2, 2, 1, 1]
    assert decompose_xj(1, 3) == MotiveExpr([F(1, 3), R(1, 1), R(1, 2)])
    assert decompose_xj(1, 3).profile().coefficients() == [1, 2, 2, 1]
    xj33 = decompose_xj(3, 3)
    assert len(xj33) == 12
    prof = xj33.profile()
    assert prof.total() == 24
    assert prof.coefficients() == [1, 1, 1, 1] + [2] * 8 + [1, 1, 1, 1]
    assert decompose_xj(0, 5) == MotiveExpr([split_quadric(3)])
    with pytest.raises(ValueError):
        decompose_xj(4, 3)
    with pytest.raises(ValueError):
        decompose_xj(2, 2)


def test_pfister_quadric_block():
    assert pfister_quadric_expr(2) == MotiveExpr([R(2, 0), R(2, 1)])
    assert pfister_quadric_expr(2).profile() == split_quadric_profile(2)
    assert pfister_quadric_expr(3).profile() == split_quadric_profile(6)


# -- the blow-up identity ---------------------------------------------------

def test_codim_z1():
    assert codim_z1(1, 3) == 2   # 3-dim quadric, curve locus
    assert codim_z1(2, 3) == 3
    assert codim_z1(3, 3) == 5
    # matches dim Q - dim Z1 with the model dimensions
    for r, n in [(1, 3), (1, 6), (2, 3), (2, 5), (3, 3)]:
        dim_q = (1 << r) * (n - 1) - 1
        dim_z1 = {1: n - 2, 2: 2 * n - 2, 3: 10}[r]
        assert codim_z1(r, n) == dim_q - dim_z1


def test_blowup_identity_range():
    for r in (0, 1, 2):
        for n in range(3, 11):
            rep = verify_blowup(r, n)
            assert rep.equal, (r, n)
    assert verify_blowup(3, 3).equal


def test_blowup_profile_2_3():
    rep = verify_blowup(2, 3)
    assert rep.lhs.coefficients() == [1, 2, 4, 5, 5, 4, 2, 1]
    assert rep.lhs.total() == 24
    assert rep.rhs == rep.lhs


def test_blowup_dimension_variant_unbalanced():
    for r, n in [(1, 3), (2, 3), (2, 4), (3, 3)]:
        rep = verify_blowup(r, n)
        assert rep.equal_variant_d1 is False


def test_blowup_degenerate_r0():
    rep = verify_blowup(0, 6)
    assert rep.equal
    assert rep.lhs == split_quadric_profile(4)


def test_recursion_matches_closed_form():
    for r in (0, 1, 2):
        for n in range(3, 11):
            assert poincare_xj_recursive(r, n) == decompose_xj(r, n).profile()
    assert poincare_xj_recursive(3, 3) == decompose_xj(3, 3).profile()
    assert poincare_xj_recursive(2, 3).coefficients() == [1, 1, 2, 2, 2, 2, 1, 1]
    assert poincare_xj_recursive(1, 3).coefficients() == [1, 2, 2, 1]
    p33 = poincare_xj_recursive(3, 3)
    assert p33.total() == 24 and p33.is_palindromic() and p33.max_degree() == 15


def test_palindromic_sweep():
    for r in (0, 1, 2):
        for n in range(3, 11):
            prof = decompose_xj(r, n).profile()
            assert prof.is_palindromic()
            assert prof.max_degree() == (1 << r) * (n - 1) - 1


def test_euler_characteristics_vs_weyl():
    expected = {(1, 3): 6, (2, 3): 12, (2, 4): 24, (2, 5): 40, (3, 3): 24}
    for (r, n), chi in expected.items():
        assert decompose_xj(r, n).profile().total() == chi
        assert rootsys.xj_euler_characteristic(r, n) == chi
    for r in (0, 1, 2):
        for n in range(3, 11):
            assert (decompose_xj(r, n).profile().total()
                    == rootsys.xj_euler_characteristic(r, n))


def test_krashen_reports():
    k3 = verify_krashen(3)
    assert not k3.literal_equal
    assert (k3.lhs_literal.total(), k3.rhs.total()) == (10, 12)
    assert k3.variant_equal
    for n in range(3, 9):
        k = verify_krashen(n)
        assert not k.literal_equal
        assert k.variant_equal
        assert k.rhs.total() == 2 * n * (n - 1)


def test_expr_multiset_semantics():
    a = MotiveExpr([R(2, 1), F(2, 3)])
    b = MotiveExpr([F(2, 3), R(2, 1)])
    assert a == b
    assert MotiveExpr([R(2, 1), R(2, 1)]) != MotiveExpr([R(2, 1)])


def test_as_dict_schema():
    d = decompose_neighbour_quadric(2, 4).as_dict()
    assert d["summands"][0] == {"kind": "F", "r": 2, "n": 4, "twist": 0}
    assert d["summands"][-1] == {"kind": "R", "r": 2, "twist": 5}
    assert d["profile"] == [1] * 12
