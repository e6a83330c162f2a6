"""Trace valuations, scalar sums, positivity, and the axiom equivalences."""

from fractions import Fraction

import numpy as np
import pytest

from sccckit import (
    COMPLEX,
    Gen,
    Morphism,
    Oplus,
    TypeMismatch,
    UNIT,
    WProjModel,
    check_born_decomposition,
    check_diagonal_axiom,
    check_ortho_bornian,
    check_theorem_equivalence,
    check_trace_linearity,
    compose,
    corrupted_trace,
    dagger,
    decomposition,
    equal,
    fdhilb,
    identity,
    is_positive,
    rel_model,
    scalar_sum,
    scalar_value,
    valuation_norm,
    weight_model,
)

Q = Gen("Q", 2)
M = fdhilb()


def cmor(arr, dom=Q, cod=Q):
    return Morphism(dom, cod, np.asarray(arr, dtype=complex), COMPLEX)


def test_positive_complex_with_witness():
    rng = np.random.default_rng(51)
    for _ in range(20):
        h = M.sample_positive(rng, Q)
        ok, w = is_positive(h)
        assert ok
        # the witness actually factors h
        assert equal(compose(dagger(w), w), h)


def test_non_positive_is_rejected():
    ok, w = is_positive(cmor([[1, 0], [0, -1]]))
    assert not ok and w is None
    ok, w = is_positive(cmor([[0, 1], [0, 0]]))  # not even self-adjoint
    assert not ok and w is None


def test_boolean_positivity_by_search():
    m = rel_model()
    sym = Morphism(Q, Q, np.array([[1, 1], [1, 1]], dtype=np.bool_), m.semiring)
    ok, w = is_positive(sym)
    assert ok
    assert np.array_equal(m.semiring.matmul(w.array.T, w.array), sym.array)
    anti = Morphism(Q, Q, np.array([[0, 1], [1, 0]], dtype=np.bool_), m.semiring)
    ok, _ = is_positive(anti)
    assert not ok


def test_positivity_needs_endomorphism():
    with pytest.raises(TypeMismatch):
        is_positive(cmor([[1, 0]], dom=Q, cod=Gen("B", 1)))


def test_valuation_norm_oracle():
    # ||f|| at nu=1 is the squared HS weight: 30 for [[1,2],[3,4]]
    f = cmor([[1, 2], [3, 4]])
    assert scalar_value(valuation_norm(M, f)) == pytest.approx(30)
    assert scalar_value(valuation_norm(M, f, Fraction(1, 2))) == pytest.approx(np.sqrt(30))


def test_valuation_splits_over_blocks():
    rng = np.random.default_rng(52)
    d = decomposition(Q, Gen("B", 3))
    for nu in (Fraction(1), Fraction(1, 2)):
        for _ in range(20):
            f = M.sample_morphism(rng, d.whole, d.whole)
            assert check_born_decomposition(M, f, d, nu)


def test_scalar_sum_frozen_values():
    one = M.scalar(1.0 + 0j)
    # nu = 1: ordinary addition; nu = 1/2: sqrt-domain addition
    assert scalar_value(scalar_sum(M, one, one)) == pytest.approx(2.0, abs=1e-12)
    assert scalar_value(scalar_sum(M, one, one, Fraction(1, 2))) == pytest.approx(
        np.sqrt(2.0), abs=1e-12)
    # quotient scalars are squared weights, so their "2" is 4
    w = WProjModel(fdhilb())
    wone = w.scalar(1.0)
    assert w.scalar_value(scalar_sum(w, wone, wone)) == pytest.approx(4.0, abs=1e-12)
    # booleans saturate
    r = rel_model()
    assert r.scalar_value(scalar_sum(r, r.scalar(True), r.scalar(True))) == 1


def test_scalar_sum_matches_block_trace():
    # s + t = Tr(s (+) t) at nu = 1, on random nonnegative weights
    rng = np.random.default_rng(53)
    for _ in range(20):
        s = M.scalar(complex(rng.uniform(0, 4)))
        t = M.scalar(complex(rng.uniform(0, 4)))
        got = scalar_value(scalar_sum(M, s, t))
        want = scalar_value(s) + scalar_value(t)
        assert got == pytest.approx(want, rel=1e-9)


def test_corrupted_trace_drops_an_entry():
    tr = corrupted_trace(M)
    assert scalar_value(tr(identity(Gen("A", 3), COMPLEX))) == pytest.approx(2.0)
    assert scalar_value(tr(identity(Oplus(UNIT, UNIT), COMPLEX))) == pytest.approx(1.0)


@pytest.mark.parametrize("make", [fdhilb, rel_model, weight_model,
                                  lambda: WProjModel(fdhilb())])
def test_axiom_checks_pass(make):
    m = make()
    for batch in (check_diagonal_axiom(m, trials=15, seed=3),
                  check_trace_linearity(m, trials=15, seed=3),
                  check_ortho_bornian(m, trials=15, seed=3)):
        assert all(r.status == "pass" for r in batch)


def test_axiom_checks_fail_under_corrupted_trace():
    tr = corrupted_trace(M)
    diag = check_diagonal_axiom(M, trials=15, seed=3, trace_fn=tr)
    norm = check_ortho_bornian(M, trials=15, seed=3, trace_fn=tr)
    assert any(r.status == "fail" for r in diag)
    assert any(r.status == "fail" for r in norm)


def test_equivalence_verdicts():
    for m in (M, WProjModel(fdhilb())):
        results = check_theorem_equivalence(m, trials=10, seed=4)
        by_name = {r.check_name: r for r in results}
        honest = by_name["axiom-legs-agree"]
        assert honest.status == "pass"
        assert all(honest.witness["verdicts"].values())
        control = by_name["axiom-legs-agree-corrupted-control"]
        assert control.status == "expected-fail"
        assert not any(control.witness["verdicts"].values())
