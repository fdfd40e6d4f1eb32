import pytest

from derham import (ComplexSpec, FormContext, LaurentPolynomial, Truncation,
                    koszul_cohomology_dims, log_koszul_cohomology_dims,
                    parse_polynomial, truncated_complex_dims)
from derham.cohomology import (GRADED_MEROMORPHIC, KOSZUL, TWISTED,
                               CohomologyError, certified_degree_bound,
                               grading_data)
from derham.forms import LOG, MEROMORPHIC


def F(text, names):
    return parse_polynomial(text, names, [])


def twisted_dims(f, divisor=(), mode=None, truncation=Truncation()):
    if mode is None:
        mode = LOG if divisor else "polynomial"
    ctx = FormContext(f.nvars, divisor, mode)
    return truncated_complex_dims(ComplexSpec(ctx, f, TWISTED, truncation))


def test_one_variable_twisted_dims():
    # H^1 of (Omega^*, d - df) has dim = number of critical points with
    # multiplicity: f = x^(k+1) gives k
    for k in (1, 2, 3):
        rep = twisted_dims(F(f"x^{k + 1}", ["x"]))
        assert rep.dims == [0, k]
        assert rep.stable and rep.certified
    rep = twisted_dims(F("x^3 - 3*x", ["x"]))
    assert rep.dims == [0, 2]
    assert rep.stable and not rep.certified  # not quasi-homogeneous


def test_no_critical_points_means_acyclic():
    rep = twisted_dims(F("x", ["x"]))
    assert rep.dims == [0, 0]


def test_koszul_staircase_route():
    rep = koszul_cohomology_dims(F("x^3 + y^4", ["x", "y"]))
    assert rep.dims == [0, 0, 6]
    assert rep.certified and rep.trace == []
    assert len(rep.evidence["staircase_basis"]) == 6


def test_koszul_truncated_fallback():
    # x^2*y has a non-isolated critical locus: fall back, uncertified
    rep = koszul_cohomology_dims(F("x^2*y", ["x", "y"]))
    assert not rep.certified


def test_log_koszul_examples():
    assert log_koszul_cohomology_dims(F("x", ["x"]), {0}).dims == [0, 1]
    assert log_koszul_cohomology_dims(F("x^2", ["x"]), {0}).dims == [0, 2]
    rep = log_koszul_cohomology_dims(F("x + y^2", ["x", "y"]), {0})
    assert rep.dims == [0, 0, 1]
    assert rep.certified


def test_twisted_log_examples():
    assert twisted_dims(F("x", ["x"]), {0}).dims == [0, 1]
    assert twisted_dims(F("x^2", ["x"]), {0}).dims == [0, 2]
    assert twisted_dims(F("x + y", ["x", "y"]), {0, 1}).dims == [0, 0, 1]


def test_meromorphic_matches_log():
    f = F("x + y^2", ["x", "y"])
    log_rep = twisted_dims(f, {0}, LOG)
    mero_rep = twisted_dims(f, {0}, MEROMORPHIC)
    assert log_rep.dims == mero_rep.dims == [0, 0, 1]


def test_graded_meromorphic_matches_log_koszul():
    f = F("x", ["x"])
    ctx = FormContext(1, {0}, MEROMORPHIC)
    rep = truncated_complex_dims(
        ComplexSpec(ctx, f, GRADED_MEROMORPHIC, Truncation()))
    assert rep.dims == log_koszul_cohomology_dims(f, {0}).dims == [0, 1]


def test_grading_data():
    w, deg, qh = grading_data(F("x^3 + y^4", ["x", "y"]))
    assert (w, deg, qh) == ((4, 3), 12, True)
    w, deg, qh = grading_data(F("x^3 - 3*x", ["x"]))
    assert (w, qh) == ((1,), False)
    assert certified_degree_bound((4, 3), 12) == (12 - 4) + (12 - 3) + 12


def test_instability_is_reported_not_raised():
    trunc = Truncation(initial_degree=1, max_doublings=0)
    rep = twisted_dims(F("x^4", ["x"]), truncation=trunc)
    assert not rep.stable and not rep.certified
    assert any("no stabilization" in n for n in rep.notes)
    assert len(rep.trace) == 1


def test_doubling_trace_grows_until_agreement():
    rep = twisted_dims(F("x^2", ["x"]),
                       truncation=Truncation(initial_degree=1,
                                             max_doublings=6))
    assert rep.stable
    assert rep.trace[-1]["dims"] == rep.trace[-2]["dims"] == [0, 1]
    assert [t["degree_bound"] for t in rep.trace] == \
        [2 ** i for i in range(len(rep.trace))]


def test_spec_validation():
    f = F("x", ["x"])
    with pytest.raises(CohomologyError):
        ComplexSpec(FormContext(1), f, "bogus")
    with pytest.raises(CohomologyError):
        ComplexSpec(FormContext(1, {0}, LOG), f, GRADED_MEROMORPHIC)
    with pytest.raises(CohomologyError):
        ComplexSpec(FormContext(1), LaurentPolynomial.constant(1, 3), TWISTED)
    with pytest.raises(CohomologyError):
        Truncation(initial_degree=0)
    with pytest.raises(CohomologyError):
        Truncation(pole_bound=0)


def test_three_variable_quadric():
    rep = twisted_dims(F("x^2 + y^2 + z^2", ["x", "y", "z"]))
    assert rep.dims == [0, 0, 0, 1]
    assert rep.certified
