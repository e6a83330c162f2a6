"""Object expression laws: dimensions, duals, and the text round trip."""

import hypothesis.strategies as st
from hypothesis import given

from sccckit import (
    UNIT,
    ZERO,
    Dual,
    Gen,
    Oplus,
    Tensor,
    dim,
    dual,
    format_object,
    normalize,
    obj_equal,
    parse_object,
)

import pytest


def objects(max_leaves=5):
    leaves = st.one_of(
        st.just(UNIT),
        st.just(ZERO),
        st.builds(Gen, st.sampled_from("ABCDE"), st.integers(1, 4)),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(Tensor, inner, inner),
            st.builds(Oplus, inner, inner),
            st.builds(Dual, inner),
        ),
        max_leaves=max_leaves,
    )


def test_dim_oracle():
    # dim(A (x) (I (+) B)) = 3 * (1 + 2) = 9, counted by hand
    a = Tensor(Gen("A", 3), Oplus(UNIT, Gen("B", 2)))
    assert dim(a) == 9
    assert dim(UNIT) == 1
    assert dim(ZERO) == 0
    assert dim(dual(a)) == 9


@given(objects(), objects())
def test_dim_multiplicative_additive(a, b):
    # dim(a (x) b) = dim(a) * dim(b),  dim(a (+) b) = dim(a) + dim(b)
    assert dim(Tensor(a, b)) == dim(a) * dim(b)
    assert dim(Oplus(a, b)) == dim(a) + dim(b)


@given(objects())
def test_dual_is_involutive(a):
    assert obj_equal(dual(dual(a)), a)


def test_dual_normal_forms():
    a, b = Gen("A", 2), Gen("B", 3)
    # duals push through both connectives and die on the units
    assert format_object(dual(Tensor(a, b))) == "A[2]*@B[3]*"
    assert format_object(dual(Oplus(a, b))) == "A[2]*+B[3]*"
    assert obj_equal(dual(UNIT), UNIT)
    assert obj_equal(dual(ZERO), ZERO)
    assert obj_equal(normalize(Dual(Dual(a))), a)


@given(objects())
def test_format_parse_round_trip(a):
    assert obj_equal(parse_object(format_object(a)), a)


def test_parse_oracle_strings():
    assert dim(parse_object("A[2]* @ (I + B[3])")) == 8
    assert obj_equal(parse_object("I"), UNIT)
    assert obj_equal(parse_object("0"), ZERO)
    assert obj_equal(parse_object("(A[2]+I)*"), dual(Oplus(Gen("A", 2), UNIT)))


@pytest.mark.parametrize("bad", ["", "A[", "A[0", "Q", "A[2] +", "(I", "A'[2]"])
def test_parse_rejects_garbage(bad):
    with pytest.raises((ValueError, KeyError)):
        parse_object(bad)


def test_gen_rejects_bad_names():
    with pytest.raises(ValueError):
        Gen("A'", 2)
    with pytest.raises(ValueError):
        Gen("", 2)
    with pytest.raises(ValueError):
        Gen("A", 0)
