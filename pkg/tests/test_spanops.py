"""Closure, singular blocks, and hom spaces over module columns."""

from fractions import Fraction

from superw.linalg import DEFAULT_PRIME
from superw.modules import adjoint_module, lambda_module, local_terms
from superw.spanops import (burnside_full, hom_basis, hom_value,
                            module_closure, singular_blocks)
from superw.walgebra import BorelOrder, nilradical_generating_terms
from superw.weights import Weight


def test_closure_from_constants_is_one_dimensional():
    m = lambda_module(3)
    ech = module_closure(m, local_terms(3), [{0: Fraction(1)}])
    assert ech.dim == 1


def test_closure_from_generator_is_everything():
    m = lambda_module(3)
    ech = module_closure(m, local_terms(3), [{1: Fraction(1)}])  # xi1
    assert ech.dim == m.dim


def test_closure_mod_p_shortcut_agrees():
    m = lambda_module(3)
    exact = module_closure(m, local_terms(3), [{7: Fraction(1)}])
    shadow = module_closure(m, local_terms(3), [{7: 1}], p=DEFAULT_PRIME)
    assert exact.dim == shadow.dim == m.dim


def test_singular_lines_of_the_exterior_module():
    m = lambda_module(3)
    b = BorelOrder("natural", 3, "max")
    sing = singular_blocks(m, nilradical_generating_terms(b))
    weights = {key[0] for key in sing}
    assert weights == {Weight.zero(),
                       Weight(((1, 1), (2, 1), (3, 1)))}
    assert all(len(vs) == 1 for vs in sing.values())


def test_singular_block_filter():
    m = lambda_module(3)
    b = BorelOrder("natural", 3, "max")
    sing = singular_blocks(m, nilradical_generating_terms(b),
                           block_filter=lambda key: key[0].is_zero())
    assert {key[0] for key in sing} == {Weight.zero()}


def test_burnside_detects_simplicity():
    full = lambda_module(2)
    assert not burnside_full(full, local_terms(2), DEFAULT_PRIME)
    from superw.modules import quotient_module, submodule_generated
    q = quotient_module(full, submodule_generated(full, [{0: Fraction(1)}]))
    assert burnside_full(q, local_terms(2), DEFAULT_PRIME)


def test_endomorphisms_of_indecomposable():
    m = lambda_module(3)
    homs = hom_basis(m, m, local_terms(3))
    assert len(homs) == 1
    phi = homs[0]
    v = {3: Fraction(2)}   # a middle basis vector
    out = hom_value(phi, v)
    # the unique endomorphism is a scalar
    assert list(out) == [3]


def test_hom_between_module_and_dual_is_empty():
    from superw.modules import dual_module
    m = adjoint_module(2)
    assert hom_basis(m, dual_module(lambda_module(2)), local_terms(2)) == []
