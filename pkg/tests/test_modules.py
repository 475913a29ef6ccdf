"""Finite weight modules: constructions, characters, submodule
machinery, simplicity verdicts, and serialization."""

from fractions import Fraction

import pytest

from superw.modules import (Character, adjoint_module, check_representation,
                            dual_module, is_simple, iso_check, lambda_module,
                            module_from_json, module_to_json, psi_invariants,
                            quotient_module, singular_vectors,
                            submodule_generated, tensor_module,
                            trivial_module)
from superw.glmodules import gl_iso_check, gl_trivial
from superw.walgebra import BorelOrder, grading_element
from superw.weights import Weight


def test_builders_satisfy_the_bracket_relation():
    for m in (trivial_module(2), lambda_module(3), adjoint_module(2),
              dual_module(lambda_module(2)),
              tensor_module(lambda_module(2), trivial_module(2))):
        assert check_representation(m) == []


def test_weight_grading_is_the_z_grading():
    for m in (lambda_module(3), adjoint_module(3)):
        for i in range(m.dim):
            assert m.weights[i].total() == m.zdegs[i]


def test_grading_element_acts_by_degree():
    m = adjoint_module(3)
    e = grading_element(3)
    for i in range(m.dim):
        out = m.act(e, {i: Fraction(1)})
        want = {i: Fraction(m.zdegs[i])} if m.zdegs[i] else {}
        assert out == want


def test_exterior_module_has_unique_proper_submodule():
    m = lambda_module(3)
    sub = submodule_generated(m, [{0: Fraction(1)}])
    assert sub.dim == 1
    q = quotient_module(m, sub)
    assert q.dim == 7
    assert is_simple(q).simple
    v = is_simple(m)
    assert not v.simple
    assert v.witness is not None


def test_adjoint_closure_from_grading_element_is_full():
    # the grading element is central in degree zero but not invariant
    # under the odd parts, so it generates the whole adjoint
    from superw.modules import all_terms
    m = adjoint_module(2)
    index = {t: j for j, t in enumerate(all_terms(2))}
    seed = {index[t]: Fraction(c)
            for t, c in grading_element(2).terms.items()}
    sub = submodule_generated(m, [seed])
    assert sub.dim == m.dim


def test_dual_double_dual_round_trip():
    m = adjoint_module(2)
    assert iso_check(dual_module(dual_module(m)), m) is not None


def test_dual_reverses_character():
    m = lambda_module(2)
    ch = m.character()
    dch = dual_module(m).character()
    flipped = {(tuple(-x for x in w), -z): mult
               for (w, z), mult in ch.entries.items()}
    assert dch.entries == flipped


def test_tensor_character_is_convolution():
    a, b = lambda_module(2), adjoint_module(2)
    assert tensor_module(a, b).character() == a.character().convolve(b.character())


def test_character_restrict_forgets_degree():
    ch = lambda_module(2).character()
    flat = ch.restrict()
    assert flat[(0, 0)] == 1 and flat[(1, 1)] == 1
    assert sum(flat.values()) == 4


def test_character_equality_is_structural():
    a = Character(2, {((1, 0), 1): 1})
    b = Character(2, {((1, 0), 1): 1})
    c = Character(2, {((1, 0), 1): 2})
    assert a == b and a != c


def test_singular_vectors_of_quotient():
    m = lambda_module(3)
    q = quotient_module(m, submodule_generated(m, [{0: Fraction(1)}]))
    b = BorelOrder("natural", 3, "max")
    sing = singular_vectors(q, b)
    assert len(sing) == 1
    ((w, _z, _p),) = sing.keys()
    assert w == Weight(((1, 1), (2, 1), (3, 1)))


def test_psi_invariants_of_trivial():
    assert gl_iso_check(psi_invariants(trivial_module(3)), gl_trivial(3)) is not None


def test_iso_check_rejects_different_characters():
    assert iso_check(lambda_module(2), dual_module(lambda_module(2))) is None


def test_submodule_module_restricts_action():
    m = lambda_module(3)
    sub = submodule_generated(m, [{0: Fraction(1)}])
    s = sub.module()
    assert s.dim == 1
    assert check_representation(s) == []


def test_quotient_of_full_submodule_raises():
    m = lambda_module(2)
    sub = submodule_generated(m, [{1: Fraction(1)}])
    assert sub.dim == m.dim
    with pytest.raises(ValueError):
        quotient_module(m, sub)


def test_module_json_round_trip():
    m = adjoint_module(2)
    text = module_to_json(m)
    back = module_from_json(text)
    assert back.dim == m.dim
    assert back.weights == m.weights
    from superw.modules import all_terms
    for t in all_terms(2):
        for j in range(m.dim):
            assert back.column(t, j) == m.column(t, j)


def test_weight_of_rejects_mixed_vectors():
    m = lambda_module(2)
    with pytest.raises(ValueError):
        m.weight_of({0: Fraction(1), 1: Fraction(1)})
