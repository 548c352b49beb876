"""Compiled and pure kernels must agree counter for counter, and both must
match the exact cardinality oracles on complete sweeps."""

import itertools

import pytest

from jordanquad import _fpcore_py, fpkernels, motives, sweeps
from jordanquad.quadform import (QuadForm, evaluate, fp_projective_zero_count,
                                 isotropic_vector_search)
from jordanquad.scalars import PrimeField

HAVE = fpkernels.HAVE_COMPILED
needs_compiled = pytest.mark.skipif(not HAVE, reason="compiled kernels absent")

CONFIGS = [(5, 0, 3), (5, 0, 4), (5, 1, 3), (3, 1, 4), (3, 2, 3), (5, 2, 3)]


def test_point_enumeration_counts():
    for p, N in [(3, 2), (5, 3), (7, 4)]:
        pts = [tuple(pt) for pt in _fpcore_py._points(p, N)]
        assert len(pts) == sweeps.projective_size(p, N)
        assert len(set(pts)) == len(pts)
        # canonical: first nonzero coordinate is 1
        for pt in pts:
            lead = next(x for x in pt if x)
            assert lead == 1


def test_pure_isotropic_vector_matches_bruteforce():
    for p in (3, 5, 7):
        for coeffs in [(1, 1), (1, p - 1), (1, 2, 2), (2,), (1, 1, 1, 1)]:
            got = _fpcore_py.isotropic_vector(p, list(coeffs))
            brute = None
            for v in itertools.product(range(p), repeat=len(coeffs)):
                if any(v) and sum(c * x * x for c, x in zip(coeffs, v)) % p == 0:
                    lead = next(x for x in v if x)
                    if lead == 1:
                        brute = v
                        break
            if brute is None:
                assert got is None
            else:
                assert got is not None
                f = QuadForm(PrimeField(p), coeffs)
                assert evaluate(f, got) == 0


@needs_compiled
def test_isotropic_vector_agreement():
    for p in (3, 5, 7, 11):
        for coeffs in [(1, 1), (1, p - 1), (1, 2, 2), (1, 1, 1, 1, 2), (2, 1)]:
            a = fpkernels.compiled.isotropic_vector(p, list(coeffs))
            b = _fpcore_py.isotropic_vector(p, list(coeffs))
            assert a == b


@needs_compiled
def test_sweep_agreement_full():
    for p, r, n in CONFIGS:
        alg = sweeps.fp_algebra(p, r, n)
        ki = sweeps.kernel_inputs(alg)
        assert fpkernels.compiled.quadric_sweep(*ki) == _fpcore_py.quadric_sweep(*ki)
        assert fpkernels.compiled.z1_sweep(*ki) == _fpcore_py.z1_sweep(*ki)


@needs_compiled
def test_sweep_agreement_with_limit():
    alg = sweeps.fp_algebra(5, 2, 3)
    ki = sweeps.kernel_inputs(alg)
    for limit in (0, 1, 17, 400):
        assert (fpkernels.compiled.quadric_sweep(*ki, limit)
                == _fpcore_py.quadric_sweep(*ki, limit))
        assert (fpkernels.compiled.z1_sweep(*ki, limit)
                == _fpcore_py.z1_sweep(*ki, limit))


def test_quadric_sweep_oracles_pure():
    """The pure kernel against the exact counting oracles (the compiled
    kernel is covered by agreement above)."""
    for p, r, n in [(5, 0, 3), (5, 1, 3), (3, 2, 3)]:
        alg = sweeps.fp_algebra(p, r, n)
        ki = sweeps.kernel_inputs(alg)
        raw = _fpcore_py.quadric_sweep(*ki)
        counts = dict(zip(sweeps._QUADRIC_COUNTERS, raw))
        from jordanquad.birational import q_form
        assert counts["scanned"] == sweeps.projective_size(p, alg.cd.dim * (n - 1) + 1)
        assert counts["on_quadric"] == fp_projective_zero_count(q_form(alg))
        assert counts["base_points"] == sweeps.z1_expected_count(alg)
        for key in ("roundtrip_fail", "sym_fail", "trace_fail", "diag_fail",
                    "z1_flag_fail"):
            assert counts[key] == 0


def test_z1_sweep_against_naive_membership():
    """Count base-locus points with the high-level predicate and compare."""
    from jordanquad.birational import ProjPointC, in_z1
    p, r, n = 3, 2, 3
    alg = sweeps.fp_algebra(p, r, n)
    ki = sweeps.kernel_inputs(alg)
    raw = _fpcore_py.z1_sweep(*ki)
    m = alg.cd.dim
    naive = 0
    for pt in _fpcore_py._points(p, m * (n - 1)):
        blocks = [alg.cd.element(pt[i * m:(i + 1) * m]) for i in range(n - 1)]
        if in_z1(ProjPointC(alg, blocks, 0)):
            naive += 1
    assert raw[1] == naive == motives.decompose_z1(r, n).profile().eval_at(p)


def test_sweep_reports():
    rep = sweeps.exhaustive_quadric_sweep(sweeps.fp_algebra(7, 1, 3))
    assert rep.ok and rep.mode == "exhaustive"
    rep = sweeps.exhaustive_z1_sweep(sweeps.fp_algebra(7, 1, 3, split=False))
    assert rep.ok and rep.counts["z1_points"] == 0
    d = rep.as_dict()
    assert d["ok"] and d["kind"] == "z1"


def test_budget_dispatch():
    # huge space falls back to sampling; small one exhausts
    rep = sweeps.roundtrip_suite_case(7, 2, 4, budget=1000, samples=10, seed=3)
    assert rep.mode == "sampled" and rep.ok, rep.failures
    rep2 = sweeps.roundtrip_suite_case(7, 0, 3, budget=1000)
    assert rep2.mode == "exhaustive" and rep2.ok


def test_backend_name():
    assert fpkernels.backend_name() in ("compiled", "pure-python")


def test_isotropic_search_delegates_to_kernel():
    f = QuadForm(PrimeField(7), (1, 1))
    assert isotropic_vector_search(f) is None
    f2 = QuadForm(PrimeField(5), (1, 1))
    v = isotropic_vector_search(f2)
    assert v is not None and evaluate(f2, v) == 0
