"""Compact-structure core: units, names, traces, Born loop.

The numeric oracles here were computed by hand from small matrices and are
frozen; they must not be regenerated from the code under test.
"""

import numpy as np
import pytest

from sccckit import (
    COMPLEX,
    Gen,
    Morphism,
    Oplus,
    Tensor,
    UNIT,
    born_prob,
    born_probability_value,
    compose,
    coname,
    dagger,
    dim,
    double,
    dual,
    equal,
    fdhilb,
    hs_inner,
    hs_norm_sq,
    identity,
    lower_star,
    name,
    partial_trace,
    phase_witnesses,
    scalar,
    scalar_mult,
    scalar_value,
    star,
    tensor,
    trace,
    unit,
    yanking_composite,
    zeros,
)
from sccckit import core
from sccckit.errors import NotProjector, TypeMismatch

Q = Gen("Q", 2)
M = fdhilb()


def mor(arr, dom, cod):
    return Morphism(dom, cod, np.asarray(arr, dtype=complex), COMPLEX)


def test_basis_flip_oracle():
    # X e0 = e1
    x = mor([[0, 1], [1, 0]], Q, Q)
    e0 = mor([[1], [0]], UNIT, Q)
    e1 = mor([[0], [1]], UNIT, Q)
    assert equal(compose(x, e0), e1)


def test_unit_and_name_of_identity_oracle():
    # eta_Q = vec(1_Q) = (1,0,0,1)^T, columns stacked
    e = unit(Q, COMPLEX)
    assert e.dom == UNIT and dim(e.cod) == 4
    assert np.array_equal(e.array, np.array([[1], [0], [0], [1]], dtype=complex))
    assert np.array_equal(name(identity(Q, COMPLEX)).array, e.array)
    assert np.array_equal(coname(identity(Q, COMPLEX)).array, e.array.T)


def test_name_column_stacking_oracle():
    # name([[1,2],[3,4]]) = (1,3,2,4)^T
    f = mor([[1, 2], [3, 4]], Q, Q)
    assert np.array_equal(name(f).array[:, 0], np.array([1, 3, 2, 4], dtype=complex))


def test_hs_norm_oracle():
    # |1|^2+|2|^2+|3|^2+|4|^2 = 30
    f = mor([[1, 2], [3, 4]], Q, Q)
    assert scalar_value(hs_norm_sq(f)) == pytest.approx(30)


def test_hs_inner_equals_trace_route():
    rng = np.random.default_rng(11)
    for _ in range(25):
        f = M.sample_morphism(rng, Q, Q)
        g = M.sample_morphism(rng, Q, Q)
        lhs = scalar_value(hs_inner(f, g))
        rhs = scalar_value(trace(compose(dagger(f), g)))
        assert lhs == pytest.approx(rhs, rel=1e-9)
        # and against raw numpy
        assert lhs == pytest.approx(complex(np.trace(f.array.conj().T @ g.array)))


def test_hs_inner_on_states_is_composition():
    rng = np.random.default_rng(12)
    a = Tensor(Q, Gen("B", 3))
    psi = M.sample_state(rng, a)
    phi = M.sample_state(rng, a)
    assert equal(hs_inner(psi, phi), compose(dagger(psi), phi))


def test_born_loop_oracle():
    # psi = (1,1)/sqrt(2), P = |0><0|  ->  probability 1/2
    psi = mor([[1], [1]], UNIT, Q)
    psi = scalar_mult(scalar(1 / np.sqrt(2), COMPLEX), psi)
    p = mor([[1, 0], [0, 0]], Q, Q)
    assert born_probability_value(psi, p) == pytest.approx(0.5)


def test_born_loop_equals_density_trace():
    rng = np.random.default_rng(13)
    for _ in range(20):
        psi = M.sample_state(rng, Q, normalized=True)
        v = M.sample_state(rng, Q, normalized=True)
        p = compose(v, dagger(v))  # rank-one projector
        rho = compose(psi, dagger(psi))
        got = born_probability_value(psi, p)
        want = scalar_value(trace(compose(p, rho)))
        assert got == pytest.approx(want.real, abs=1e-9)
        assert abs(want.imag) <= 1e-9


def test_born_prob_rejects_non_projector():
    psi = mor([[1], [0]], UNIT, Q)
    with pytest.raises(NotProjector):
        born_prob(psi, mor([[1, 1], [0, 1]], Q, Q))


def test_partial_trace_index_sum_oracle():
    # Tr_A(f)[j,k] = sum_i f[i*dB+j, i*dB+k], checked by an explicit loop
    rng = np.random.default_rng(14)
    a, b = Gen("A", 2), Gen("B", 3)
    f = M.sample_morphism(rng, Tensor(a, b), Tensor(a, b))
    got = partial_trace(f, a)
    want = np.zeros((3, 3), dtype=complex)
    for j in range(3):
        for k in range(3):
            for i in range(2):
                want[j, k] += f.array[i * 3 + j, i * 3 + k]
    assert got.dom == b and got.cod == b
    assert np.allclose(got.array, want)


def test_partial_trace_of_identity_factor():
    rng = np.random.default_rng(15)
    a, b = Gen("A", 3), Gen("B", 2)
    g = M.sample_morphism(rng, b, b)
    lhs = partial_trace(tensor(identity(a, COMPLEX), g), a)
    assert np.allclose(lhs.array, 3 * g.array)


@pytest.mark.parametrize("obj", [
    UNIT,
    Q,
    Gen("A", 3),
    dual(Q),
    Tensor(Q, Gen("A", 3)),
    Oplus(Q, UNIT),
])
def test_yanking(obj):
    assert equal(yanking_composite(obj, COMPLEX), identity(obj, COMPLEX))


def test_swap_on_product_states():
    rng = np.random.default_rng(16)
    a, b = Gen("A", 2), Gen("B", 3)
    x = M.sample_state(rng, a)
    y = M.sample_state(rng, b)
    s = core.sigma(a, b, COMPLEX)
    assert equal(compose(s, tensor(x, y)), tensor(y, x))


def test_structural_isos_are_permutation_free_here():
    # strict model: associator and unitors are identity matrices
    a, b, c = Gen("A", 2), Gen("B", 3), Gen("C", 2)
    assert np.array_equal(core.alpha(a, b, c, COMPLEX).array, np.eye(12))
    assert np.array_equal(core.lam(a, COMPLEX).array, np.eye(2))
    assert np.array_equal(core.rho(a, COMPLEX).array, np.eye(2))


def test_dagger_factors_through_stars():
    rng = np.random.default_rng(17)
    a, b = Gen("A", 2), Gen("B", 3)
    f = M.sample_morphism(rng, a, b)
    # f(dagger) = (f_*)^* = (f^*)_*
    assert equal(dagger(f), star(lower_star(f)))
    assert equal(dagger(f), lower_star(star(f)))
    assert star(f).dom == dual(b) and star(f).cod == dual(a)
    assert lower_star(f).dom == dual(a) and lower_star(f).cod == dual(b)


def test_double_is_phase_blind():
    f = mor([[1, 2], [3, 4]], Q, Q)
    g = scalar_mult(scalar(np.exp(0.7j), COMPLEX), f)
    assert equal(double(f), double(g))
    assert np.allclose(double(f).array, np.kron(f.array, f.array.conj().T))
    two_f = scalar_mult(scalar(2, COMPLEX), f)
    assert not equal(double(f), double(two_f))


def test_phase_witness_oracle():
    # f = [[1,2],[3,4]], g = i.f  ->  s = 30, t = -30i
    f = mor([[1, 2], [3, 4]], Q, Q)
    g = scalar_mult(scalar(1j, COMPLEX), f)
    s, t = phase_witnesses(f, g)
    assert scalar_value(s) == pytest.approx(30)
    assert scalar_value(t) == pytest.approx(-30j)
    # s.f = t.g and the witnesses carry equal weight
    assert equal(scalar_mult(s, f), scalar_mult(t, g))
    assert equal(compose(s, dagger(s)), compose(t, dagger(t)))


def test_trace_counts_dimension():
    for d in range(1, 6):
        a = Gen("A", d)
        assert scalar_value(trace(identity(a, COMPLEX))) == pytest.approx(d)


def test_trace_rejects_non_endomorphism():
    f = zeros(Q, Gen("B", 3), COMPLEX)
    with pytest.raises(TypeMismatch):
        trace(f)


def test_scalar_action_scales_entries():
    f = mor([[1, 2], [3, 4]], Q, Q)
    sf = scalar_mult(scalar(2j, COMPLEX), f)
    assert np.allclose(sf.array, 2j * f.array)
    assert scalar_value(scalar(2j, COMPLEX)) == 2j
