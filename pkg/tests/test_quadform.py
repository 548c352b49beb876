import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanquad.quadform import (QuadForm, bilinear, evaluate,
                                 fp_projective_zero_count, hilbert_symbol,
                                 invariants, is_isotropic,
                                 isotropic_vector_search, perp, pfister,
                                 relevant_places, tensor, witt_index,
                                 witt_index_by_search)
from jordanquad.errors import FieldMismatchError
from jordanquad.scalars import PrimeField, Rationals

Q = Rationals()
F7 = PrimeField(7)


# -- construction -----------------------------------------------------------

def test_pfister_examples():
    assert pfister(Q, [Fraction(5)]).coeffs == (Fraction(1), Fraction(-5))
    assert pfister(Q, [-1, -1]).coeffs == (1, 1, 1, 1)
    assert pfister(Q, []).coeffs == (Fraction(1),)
    with pytest.raises(ValueError):
        pfister(Q, [0])


def test_degenerate_rejected():
    with pytest.raises(ValueError):
        QuadForm(Q, (1, 0, 2))
    with pytest.raises(ValueError):
        QuadForm(Q, ())


def test_tensor_perp_evaluate():
    f = QuadForm(Q, (1, -5))
    g = QuadForm(Q, (3,))
    assert tensor(f, g).coeffs == (3, -15)
    assert perp(QuadForm(Q, (1, 2)), QuadForm(Q, (3,))).coeffs == (1, 2, 3)
    assert evaluate(QuadForm(Q, (1, 2, -3)), (1, 1, 1)) == 0
    with pytest.raises(FieldMismatchError):
        tensor(f, QuadForm(F7, (1,)))
    with pytest.raises(ValueError):
        evaluate(f, (1, 2, 3))


# -- Hilbert symbols --------------------------------------------------------

def test_hilbert_at_infinity():
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(-1, 2, "inf") == 1


def test_hilbert_minus_one_minus_one_at_two():
    # oracle: x^2 + y^2 + z^2 = 0 mod 8 has no primitive solution
    sols = [(x, y, z) for x in range(8) for y in range(8) for z in range(8)
            if (x * x + y * y + z * z) % 8 == 0 and (x % 2, y % 2, z % 2) != (0, 0, 0)]
    assert sols == []
    assert hilbert_symbol(-1, -1, 2) == -1


def test_hilbert_2_7_at_7():
    assert pow(3, 2, 7) == 2  # 2 is a square mod 7
    assert hilbert_symbol(2, 7, 7) == 1


def test_hilbert_bilinearity_spot():
    # (a, b c)_v = (a, b)_v (a, c)_v on a fixed grid of places and values
    vals = [Fraction(x) for x in (-10, -5, -2, -1, 1, 2, 3, 5, 6)]
    for place in ("inf", 2, 3, 5):
        for a, b, c in itertools.product(vals[:5], vals, vals[-4:]):
            assert (hilbert_symbol(a, b * c, place)
                    == hilbert_symbol(a, b, place) * hilbert_symbol(a, c, place))


@given(a=st.integers(-60, 60).filter(bool).map(Fraction),
       b=st.integers(-60, 60).filter(bool).map(Fraction))
def test_hilbert_reciprocity(a, b):
    f = QuadForm(Q, (a, b))
    prod = 1
    for place in relevant_places(f):
        prod *= hilbert_symbol(a, b, place)
    assert prod == 1


def test_hilbert_zero_input():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 1, 2)


# -- invariants -------------------------------------------------------------

def test_invariants_hyperbolic_plane():
    inv = invariants(QuadForm(Q, (1, -1)))
    assert inv.dim == 2 and inv.disc == -1 and inv.signature == (1, 1)
    assert all(v == 1 for v in inv.hasse.values())


def test_invariants_definite():
    inv = invariants(QuadForm(Q, (1, 1, 1, 1)))
    assert inv.disc == 1 and inv.signature == (4, 0)


def test_invariants_fp():
    inv = invariants(QuadForm(F7, (2, 3)))
    assert inv.dim == 2
    assert F7.same_square_class(inv.disc, F7.element(6))
    assert not F7.is_square(6)
    assert inv.signature is None and inv.hasse is None


# -- isotropy ---------------------------------------------------------------

def test_isotropy_examples():
    assert not is_isotropic(QuadForm(Q, (1, 1)))
    assert is_isotropic(QuadForm(Q, (1, 1, 1, 1, -7)))
    assert is_isotropic(QuadForm(PrimeField(5), (1, 1)))  # 1 + 2^2 = 5
    assert not is_isotropic(QuadForm(F7, (1, 1)))
    assert is_isotropic(QuadForm(F7, (1, 1, 1)))


def test_isotropy_dim4_subtle():
    # <1,1,1,1> has trivial odd-place data but is 2-adically anisotropic
    assert not is_isotropic(QuadForm(Q, (1, 1, 1, 1)))
    # 7 = 7 mod 8 is not a sum of three squares: 2-adic obstruction again
    assert not is_isotropic(QuadForm(Q, (1, 1, 1, -7)))
    assert isotropic_vector_search(QuadForm(Q, (1, 1, 1, -7)), bound=6) is None
    # while 3 = 1 + 1 + 1 is
    assert is_isotropic(QuadForm(Q, (1, 1, 1, -3)))
    assert isotropic_vector_search(QuadForm(Q, (1, 1, 1, -3)), bound=1) == (1, 1, 1, 1)


def test_witt_examples():
    assert witt_index(QuadForm(Q, (1, -1))) == 1
    assert witt_index(QuadForm(F7, (1, 1, 1, 1))) == 2
    phi = pfister(Q, [-1, -1])
    b = QuadForm(Q, (1, 1, -7))
    big = tensor(phi, b)
    assert big.dim == 12
    assert witt_index(big) == 4
    # independent corroboration: an isotropic vector exists in a small box
    assert isotropic_vector_search(big, bound=2) is not None


def test_witt_anisotropic():
    assert witt_index(QuadForm(Q, (1, 1, 1, 1))) == 0
    assert witt_index(QuadForm(Q, (1, 2, 3))) == 0


def test_isotropic_vector_search_examples():
    v = isotropic_vector_search(QuadForm(Q, (1, 2, -3)), bound=1)
    assert v == (1, 1, 1)
    assert isotropic_vector_search(QuadForm(F7, (1, 1))) is None
    assert isotropic_vector_search(QuadForm(Q, (1, -1)), bound=1) == (1, 1)


def test_search_result_evaluates_to_zero():
    f = QuadForm(PrimeField(11), (1, 3, 5))
    v = isotropic_vector_search(f)
    assert v is not None and evaluate(f, v) == 0


# -- properties -------------------------------------------------------------

@given(coeffs=st.lists(st.integers(-9, 9).filter(bool), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_witt_bound_q(coeffs):
    f = QuadForm(Q, tuple(Fraction(c) for c in coeffs))
    iw = witt_index(f)
    assert 0 <= iw <= f.dim // 2
    # stripping all hyperbolic planes must leave an anisotropic residue:
    # if iw < dim/2 the form is not totally split
    if f.dim >= 2 and iw == 0:
        assert not is_isotropic(f)


@given(coeffs=st.lists(st.integers(1, 6), min_size=1, max_size=7))
@settings(max_examples=60, deadline=None)
def test_witt_matches_search_fp(coeffs):
    f = QuadForm(F7, tuple(coeffs))
    assert witt_index(f) == witt_index_by_search(f)


def test_pfister_dichotomy():
    # isotropic Pfister forms are hyperbolic: index 0 or 2^{r-1}
    cases_q = [[-1], [-1, -1], [2], [2, 3], [-1, -1, -1], [2, -3, 5]]
    for params in cases_q:
        f = pfister(Q, params)
        assert witt_index(f) in (0, f.dim // 2)
    for p in (3, 5, 7, 11):
        fld = PrimeField(p)
        for params in ([[1], [2], [1, 1], [1, 2], [2, 2], [1, 1, 1]]):
            f = pfister(fld, params)
            assert witt_index(f) in (0, f.dim // 2)


def test_pfister_multiple_witt_divisibility():
    bs = [(1, 1), (1, -1), (1, 3), (-1, -2), (1, 1, 1), (1, 1, -7),
          (2, -3, 5), (1, 1, 1, 1), (1, 2, -3, -6), (1, 1, 1, 1, -7)]
    for r in (2, 3):
        phi = pfister(Q, [-1] * r)
        assert witt_index(phi) == 0
        for coeffs in bs:
            iw = witt_index(tensor(phi, QuadForm(Q, coeffs)))
            assert iw % (1 << r) == 0


def test_witt_step_implications():
    """The two subform implications behind the neighbour decomposition, at
    the Witt-index level, on the fixed suite."""
    for r, params in ((2, [-1, -1]), (3, [-1, -1, -1])):
        phi = pfister(Q, params)
        for coeffs in [(1, 1), (1, -1), (1, 1, -7), (2, -3, 5), (1, 1, 1, 1)]:
            n = len(coeffs)
            b = QuadForm(Q, coeffs)
            bprime = QuadForm(Q, coeffs[:-1]) if n >= 2 else None
            q = perp(tensor(phi, bprime), QuadForm(Q, (coeffs[-1],)))
            full = tensor(phi, b)
            iw_full, iw_q = witt_index(full), witt_index(q)
            iw_sub = witt_index(tensor(phi, bprime))
            for d in range(n // 2):
                t = (1 << r) * d
                # step 1: i_W(phi x b) > 2^r d  <=>  i_W(q) > 2^r d
                assert (iw_full > t) == (iw_q > t)
                # step 2 chain: down to the subform and back
                if iw_sub > t:
                    assert iw_q > (1 << r) * (d + 1) - 1
                for i in range(1, 1 << r):
                    if iw_q > t + i:
                        assert iw_sub > t


def test_consistency_isotropy_vs_search_fp():
    for p in (3, 5, 7):
        fld = PrimeField(p)
        u = fld.least_nonresidue()
        for dim in range(1, 5):
            for k in range(dim + 1):
                f = QuadForm(fld, tuple([1] * (dim - k) + [u] * k))
                assert is_isotropic(f) == (isotropic_vector_search(f) is not None)


def test_fp_projective_zero_count_vs_exhaustion():
    for p in (3, 5):
        fld = PrimeField(p)
        for coeffs in [(1,), (1, 1), (1, -1), (1, 2), (1, 1, 1), (1, 1, -1),
                       (1, 2, 2, 1), (1, 1, 1, 1)]:
            try:
                f = QuadForm(fld, coeffs)
            except ValueError:
                continue
            count = 0
            for v in itertools.product(range(p), repeat=len(coeffs)):
                if any(v):
                    lead = next(x for x in v if x)
                    if lead == 1 and evaluate(f, v) == 0:
                        count += 1
            # canonical representatives counted once each
            assert fp_projective_zero_count(f) == count


def test_witt_fp_even_dim_classification():
    # disc-sensitive middle case: <1,1> vs <1,-1> over F_7
    assert witt_index(QuadForm(F7, (1, -1))) == 1
    assert witt_index(QuadForm(F7, (1, 1))) == 0
    assert witt_index(QuadForm(F7, (1, 1, 1, 1, 1))) == 2
    assert witt_index(QuadForm(F7, (1, 1, 1))) == 1


def test_bilinear_polarization():
    f = QuadForm(Q, (1, 2, -3))
    u = (1, 2, 0)
    v = (0, 1, 1)
    uv = tuple(a + b for a, b in zip(u, v))
    assert evaluate(f, uv) == evaluate(f, u) + evaluate(f, v) + 2 * bilinear(f, u, v)
