from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sphere_spectra.engine import (
    FACTORED_ODD_ORDER,
    HIGHER_SPIN,
    SPECTRAL_FUNCTION,
    OperatorSpec,
    default_base,
    loop_products,
    neighbors,
    propagate,
    transition_quotient,
)
from sphere_spectra.errors import DomainError, PoleError
from sphere_spectra.rep_oracle import weyl_dim
from sphere_spectra.verify import run_suite, verify_against_closed_form
from sphere_spectra.weights import FORM, SYMMETRIC, BundleSpec, IsotypicLabel as L, enumerate_labels

ORDER1 = OperatorSpec(HIGHER_SPIN)


def bundle(n, k, family):
    return BundleSpec(n, k, family, None if n % 2 else "+")


def test_operator_spec_validation():
    with pytest.raises(DomainError):
        OperatorSpec(HIGHER_SPIN, 3)
    with pytest.raises(DomainError):
        OperatorSpec(FACTORED_ODD_ORDER, 4)
    with pytest.raises(DomainError):
        OperatorSpec(SPECTRAL_FUNCTION, 0)
    assert OperatorSpec(FACTORED_ODD_ORDER, 7).l == 3
    assert OperatorSpec(SPECTRAL_FUNCTION, F(5, 3)).order_2r == F(5, 3)


def test_neighbors_examples():
    b = bundle(5, 2, SYMMETRIC)
    assert set(neighbors(b, L(2, 1, 1))) == {L(3, 1, 1), L(1, 1, 1), L(2, 2, 1), L(2, 0, 1), L(2, 1, -1)}
    assert set(neighbors(b, L(0, 0, 1))) == {L(1, 0, 1), L(0, 1, 1), L(0, 0, -1)}
    b = bundle(3, 0, FORM)
    for eps in (1, -1):
        assert set(neighbors(b, L(3, None, eps))) == {L(4, None, eps), L(2, None, eps), L(3, None, -eps)}


def test_neighbors_n3_top_tower_has_no_flip():
    """For n = 3 the q = k summands of opposite eps differ by 2 in the last slot."""
    b = bundle(3, 1, SYMMETRIC)
    assert L(0, 1, -1) not in neighbors(b, L(0, 1, 1))
    assert L(0, 0, -1) in neighbors(b, L(0, 0, 1))


def test_neighbors_even_n_include_self():
    b = bundle(4, 1, SYMMETRIC)
    assert L(1, 0) in neighbors(b, L(1, 0))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_quotient_examples(n):
    k = 2
    b = bundle(n, k, SYMMETRIC)
    for j in range(4):
        J = F(n, 2) + k + j
        assert transition_quotient(b, L(j, 2, 1), L(j + 1, 2, 1), ORDER1) == (J + 1) / J
        for q in range(k):
            assert transition_quotient(b, L(j, q, 1), L(j, q + 1, 1), ORDER1) == F(n + 2 * q, n + 2 * q - 2)
        if n > 3:
            assert transition_quotient(b, L(j, 1, 1), L(j, 1, -1), ORDER1) == -1


def test_quotient_errors():
    b = bundle(3, 0, FORM)
    with pytest.raises(DomainError):
        transition_quotient(b, L(0, None, 1), L(0, None, 1), ORDER1)
    with pytest.raises(DomainError):
        transition_quotient(b, L(0, None, 1), L(2, None, 1), ORDER1)
    # Delta between j = 0 and j = 1 is 2J + 1 = 4 at n = 3, so order 2r = 4 hits a pole
    with pytest.raises(PoleError):
        transition_quotient(b, L(0, None, 1), L(1, None, 1), OperatorSpec(SPECTRAL_FUNCTION, 4))


GRID = [bundle(n, k, fam) for n in range(3, 9) for k in range(4) for fam in (SYMMETRIC, FORM)
        if not (fam == FORM and 2 * k >= n)]


@settings(max_examples=80)
@given(st.sampled_from(GRID), st.integers(0, 12), st.integers(0, 3), st.sampled_from([1, 3, 5, F(7, 3)]))
def test_quotient_reciprocity(b, j, q, two_r):
    op = OperatorSpec(SPECTRAL_FUNCTION, two_r)
    q = min(q, b.q_max) if b.has_q else None
    src = L(j, q, 1 if b.odd else None)
    for dst in neighbors(b, src):
        if dst == src:
            continue
        try:
            there = transition_quotient(b, src, dst, op)
            back = transition_quotient(b, dst, src, op)
        except PoleError:
            continue
        assert there * back == 1


def test_propagate_rarita_schwinger():
    b = bundle(3, 1, SYMMETRIC)
    t = propagate(b, ORDER1, base=(L(0, 1, 1), F(5, 2)), j_max=1)
    v = t.values()
    assert v[L(1, 1, 1)] == F(7, 2)
    assert v[L(0, 0, 1)] == F(5, 6)
    assert v[L(0, 1, -1)] == F(-5, 2)
    assert [e.multiplicity for e in t.entries[:4]] == [6, 6, 4, 4]


def test_propagate_spinor_order3():
    b = bundle(3, 0, FORM)
    t = propagate(b, OperatorSpec(SPECTRAL_FUNCTION, 3), base=(L(0, None, 1), F(1)), j_max=2)
    v = t.values()
    assert v[L(1, None, 1)] == 7
    assert v[L(2, None, 1)] == 21
    assert v[L(1, None, -1)] == -7


def test_propagate_entries_sorted_with_dimensions():
    b = bundle(7, 2, SYMMETRIC)
    t = propagate(b, ORDER1, j_max=3)
    labels = [e.label for e in t.entries]
    assert labels == enumerate_labels(b, 3)
    for e in t.entries:
        assert e.multiplicity == weyl_dim(e.weight, 8)


def test_propagate_even_n_needs_square():
    with pytest.raises(DomainError):
        propagate(bundle(4, 1, SYMMETRIC), ORDER1, j_max=2)
    t = propagate(bundle(4, 1, SYMMETRIC), OperatorSpec(HIGHER_SPIN, 1, squared=True), j_max=0)
    assert sorted(t.values().values()) == [F(9, 4), 9]


def test_propagate_marks_poles():
    """On S^3 spinors the j = 0 -> 1 edge has Delta = 4, so order 2r = 4 cuts the tower there."""
    b = bundle(3, 0, FORM)
    t = propagate(b, OperatorSpec(SPECTRAL_FUNCTION, 4), j_max=3)
    assert t.has_poles
    assert t.pole_edges
    assert t.values()[L(0, None, -1)] == -1


def test_default_base_skips_zero():
    """The base is the first top summand where D prod (D^2 - p^2) is nonzero."""
    lab, value = default_base(bundle(3, 0, FORM), OperatorSpec(FACTORED_ODD_ORDER, 3))
    assert lab == L(0, None, 1) and value == F(15, 8)
    lab, value = default_base(bundle(4, 0, FORM), OperatorSpec(FACTORED_ODD_ORDER, 5))
    assert value != 0


@pytest.mark.parametrize("b, op, mode", [
    (bundle(5, 2, SYMMETRIC), ORDER1, "exact"),
    (bundle(3, 0, FORM), OperatorSpec(SPECTRAL_FUNCTION, 3), "ratio"),
    (bundle(4, 1, SYMMETRIC), OperatorSpec(HIGHER_SPIN, 1, squared=True), "exact"),
    (bundle(7, 2, FORM), OperatorSpec(FACTORED_ODD_ORDER, 5), "exact"),
    (bundle(6, 2, FORM), OperatorSpec(SPECTRAL_FUNCTION, 3), "ratio"),
])
def test_verify_against_closed_form(b, op, mode):
    rep = verify_against_closed_form(b, op, 10)
    assert rep.mode == mode
    assert rep.passed, rep.first_failure()
    assert len(rep.rows) == len(enumerate_labels(b, 10))


def test_loop_products_are_one():
    for b in GRID:
        for op in (OperatorSpec(SPECTRAL_FUNCTION, 1), OperatorSpec(SPECTRAL_FUNCTION, 5)):
            for cyc, prod in loop_products(b, op, 6):
                assert prod == 1, (b, cyc)


def test_small_suites_pass():
    for name in ("diagrams", "lichnerowicz", "closed-vs-engine", "factored-identity", "proportionality"):
        rep = run_suite(name, range(3, 7), k_max=2, l_max=2, j_max=4)
        assert rep["passed"], rep
        assert rep["checks"] > 0
