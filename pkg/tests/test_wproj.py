"""Global-phase quotient: classes, canonical forms, the prep-state axiom."""

import dataclasses
from itertools import product

import numpy as np
import pytest

from sccckit import (
    COMPLEX,
    CriterionDisagreement,
    Gen,
    Morphism,
    TypeMismatch,
    WProjModel,
    canonical_rep,
    check_prep_state,
    compose,
    double,
    equal,
    fdhilb,
    lift,
    rel_model,
    scalar,
    scalar_mult,
    tensor,
    wcompose,
    wdagger,
    wequal,
    wtensor,
)
from sccckit.report import deserialize_morphism

Q = Gen("Q", 2)
M = fdhilb()


def cmor(arr):
    a = np.asarray(arr, dtype=complex)
    return Morphism(Gen("A", a.shape[1]), Gen("B", a.shape[0]), a, COMPLEX)


def phase(theta):
    return scalar(np.exp(1j * theta), COMPLEX)


def test_lift_identifies_exactly_the_phases():
    rng = np.random.default_rng(31)
    for _ in range(30):
        f = M.sample_morphism(rng, Q, Q)
        g = scalar_mult(phase(rng.uniform(0, 2 * np.pi)), f)
        r = wequal(lift(f), lift(g))
        # all three criteria agree, and they say yes
        assert r.by_double == r.by_lower == r.by_projector
        assert r.equal
    f = cmor([[1, 2], [3, 4]])
    assert not wequal(lift(f), lift(scalar_mult(scalar(2, COMPLEX), f))).equal
    assert not wequal(lift(f), lift(cmor([[1, 2], [3, 5]]))).equal


def test_class_operations_commute_with_lift():
    rng = np.random.default_rng(32)
    f = M.sample_morphism(rng, Q, Q)
    g = M.sample_morphism(rng, Q, Q)
    gf = scalar_mult(phase(1.1), f)
    gg = scalar_mult(phase(2.3), g)
    assert wequal(wcompose(lift(gg), lift(gf)), lift(compose(g, f))).equal
    assert wequal(wtensor(lift(gf), lift(gg)), lift(tensor(f, g))).equal
    assert wequal(wdagger(wdagger(lift(gf))), lift(f)).equal


def test_canonical_rep_is_a_class_invariant():
    rng = np.random.default_rng(33)
    for _ in range(20):
        f = M.sample_morphism(rng, Q, Q)
        g = scalar_mult(phase(rng.uniform(0, 2 * np.pi)), f)
        cf, cg = canonical_rep(f), canonical_rep(g)
        assert equal(cf, cg)
        assert equal(canonical_rep(cf), cf)  # idempotent
        assert wequal(lift(cf), lift(f)).equal  # stays in the class


def test_canonical_rep_fixes_zero():
    z = cmor([[0, 0], [0, 0]])
    assert equal(canonical_rep(z), z)


def test_tampered_class_is_detected():
    f = cmor([[1, 2], [3, 4]])
    g = cmor([[1, 0], [0, 1]])
    forged = dataclasses.replace(lift(f), doubled=double(g))
    with pytest.raises(CriterionDisagreement):
        wequal(forged, lift(f))


def test_quotient_scalars_are_doubled():
    w = WProjModel(fdhilb())
    four = w.scalar(4.0)
    assert complex(four.rep.array[0, 0]) == pytest.approx(2.0)
    assert w.scalar_value(four) == pytest.approx(4.0)
    # |1+i|^2 = 2
    assert w.scalar_value(lift(scalar(1 + 1j, COMPLEX))) == pytest.approx(2.0)
    with pytest.raises(TypeMismatch):
        w.scalar(-1.0)


def test_doubles_faithful_without_phases():
    # over booleans there is nothing to quotient: exhaustive 2x2 check
    seen = {}
    for cells in product([False, True], repeat=4):
        arr = np.array(cells, dtype=np.bool_).reshape(2, 2)
        f = Morphism(Q, Q, arr, rel_model().semiring)
        key = double(f).array.tobytes()
        if key in seen:
            assert np.array_equal(seen[key], arr)
        seen[key] = arr
    assert len(seen) == 16


def test_prep_state_fails_in_fdhilb_with_a_phase_witness():
    report = check_prep_state(M, trials=50, seed=2)
    assert report.ok
    statuses = {r.check_name: r.status for r in report.results}
    assert statuses["doubles-determine-morphisms"] == "expected-fail"
    w = next(r.witness for r in report.results
             if r.check_name == "doubles-determine-morphisms")
    f = deserialize_morphism(w["f"], M)
    g = deserialize_morphism(w["g"], M)
    assert equal(g, scalar_mult(scalar(1j, COMPLEX), f))
    assert not equal(f, g)
    assert equal(double(f), double(g))


def test_prep_state_holds_in_the_quotient_and_in_rel():
    for model in (WProjModel(fdhilb()), rel_model()):
        report = check_prep_state(model, trials=50, seed=2)
        assert report.ok
        assert all(r.status == "pass" for r in report.results)
