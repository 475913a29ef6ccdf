"""Sign bookkeeping and multiplication in the exterior algebra."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superw.grassmann import (GrassmannElement, apply_partial, basis, degree,
                              format_element, format_monomial, gmul,
                              indices_of, mask_of, merge_sign, parse_monomial,
                              removal_sign)

masks = st.integers(min_value=0, max_value=255)


def merge_sign_oracle(a: int, b: int) -> int:
    """Count inversions by concatenating the index lists directly."""
    if a & b:
        return 0
    seq = list(indices_of(a)) + list(indices_of(b))
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
                     if seq[i] > seq[j])
    return -1 if inversions & 1 else 1


@given(masks, masks)
def test_merge_sign_matches_inversion_count(a, b):
    assert merge_sign(a, b) == merge_sign_oracle(a, b)


@given(masks)
def test_merge_with_unit(a):
    assert merge_sign(a, 0) == 1
    assert merge_sign(0, a) == 1


@given(masks, masks)
def test_merge_sign_overlap_is_zero(a, b):
    if a & b:
        assert merge_sign(a, b) == 0


def test_removal_sign_counts_lower_bits():
    assert removal_sign(1, 0b111) == 1
    assert removal_sign(2, 0b111) == -1
    assert removal_sign(3, 0b111) == 1
    assert removal_sign(3, 0b101) == -1


@given(masks, st.integers(min_value=1, max_value=8))
def test_removal_sign_reattaches_generator(mask, i):
    # xi_i * xi^(rest) picks up exactly the sign that removing i recorded
    bit = 1 << (i - 1)
    if not mask & bit:
        return
    rest = mask ^ bit
    prod = gmul(GrassmannElement.generator(i), GrassmannElement({rest: 1}))
    assert prod.terms == {mask: removal_sign(i, mask)}


@given(masks, masks, masks)
def test_gmul_associative(a, b, c):
    f, g, h = (GrassmannElement({m: 1}) for m in (a, b, c))
    assert gmul(gmul(f, g), h) == gmul(f, gmul(g, h))


@given(masks, masks)
def test_gmul_supercommutative(a, b):
    f = GrassmannElement({a: 1})
    g = GrassmannElement({b: 1})
    sign = -1 if (degree(a) & 1) and (degree(b) & 1) else 1
    assert gmul(f, g) == sign * gmul(g, f)


def test_generators_square_to_zero():
    for i in range(1, 6):
        xi = GrassmannElement.generator(i)
        assert not gmul(xi, xi)


def test_apply_partial_is_odd_derivation():
    f = GrassmannElement({0b011: 1})   # xi1 xi2
    g = GrassmannElement({0b100: 2})   # 2 xi3
    lhs = apply_partial(1, gmul(f, g))
    rhs = gmul(apply_partial(1, f), g) + gmul(f, apply_partial(1, g))
    assert lhs == rhs
    assert apply_partial(1, f).terms == {0b010: 1}
    assert apply_partial(2, f).terms == {0b001: -1}


def test_basis_sizes():
    assert len(basis(4)) == 16
    assert [len(basis(4, k)) for k in range(5)] == [1, 4, 6, 4, 1]


def test_mask_roundtrip():
    assert mask_of(indices_of(0b1011)) == 0b1011
    assert indices_of(mask_of([2, 5])) == (2, 5)


@given(masks)
def test_monomial_format_parse_roundtrip(m):
    assert parse_monomial(format_monomial(m)) == m


def test_scalar_arithmetic():
    f = GrassmannElement({0b1: 1, 0b10: 2})
    assert (Fraction(1, 2) * f).terms == {0b1: Fraction(1, 2), 0b10: 1}
    assert (f - f) == GrassmannElement.zero()
    assert format_element(GrassmannElement.zero()) == "0"


def test_inhomogeneous_degree_raises():
    f = GrassmannElement({0b1: 1, 0b11: 1})
    with pytest.raises(ValueError):
        f.degree()
