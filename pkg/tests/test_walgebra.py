"""Bracket arithmetic checked against operator composition.

The bracket is implemented in closed form; the reference here applies
both derivations to exterior elements and takes the graded commutator
of the results, so a sign slip in either route cannot hide.
"""

import random
from math import comb

import pytest

from superw.grassmann import GrassmannElement
from superw.suite import random_homogeneous
from superw.walgebra import (BorelOrder, WElement, basis_terms, bracket,
                             component_dim, format_welement,
                             graded_jacobi_defect, grading_element,
                             nilradical_generating_terms, parity,
                             parse_welement, raising_terms, term_weight,
                             w_apply, z_degree)
from superw.weights import Weight


def composition_bracket_action(x, y, f):
    sign = -1 if parity(x) and parity(y) else 1
    return w_apply(x, w_apply(y, f)) - sign * w_apply(y, w_apply(x, f))


def random_element(rng, n):
    return GrassmannElement({rng.randrange(1 << n): rng.randint(-3, 3)
                             for _ in range(3)})


def test_bracket_agrees_with_composition():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.choice((2, 3, 4))
        x, y = random_homogeneous(rng, n), random_homogeneous(rng, n)
        f = random_element(rng, n)
        assert w_apply(bracket(x, y), f) == composition_bracket_action(x, y, f)


def test_bracket_graded_antisymmetry():
    rng = random.Random(12)
    for _ in range(200):
        x, y = random_homogeneous(rng, 4), random_homogeneous(rng, 4)
        sign = -1 if parity(x) and parity(y) else 1
        assert not (bracket(x, y) + sign * bracket(y, x)).terms


def test_jacobi_on_seeded_triples():
    rng = random.Random(13)
    for _ in range(300):
        x, y, z = (random_homogeneous(rng, 3) for _ in range(3))
        assert not graded_jacobi_defect(x, y, z).terms


def test_component_dims():
    assert [component_dim(3, k) for k in range(-1, 3)] == [3, 9, 9, 3]
    for n in range(1, 7):
        for k in range(-1, n):
            assert component_dim(n, k) == comb(n, k + 1) * n
            assert len(basis_terms(n, k)) == component_dim(n, k)
        assert len(basis_terms(n)) == n * 2 ** n


def test_degree_zero_is_matrix_algebra():
    e12 = WElement.matrix_unit(3, 1, 2)
    e21 = WElement.matrix_unit(3, 2, 1)
    h = bracket(e12, e21)
    assert h.terms == {(0b001, 1): 1, (0b010, 2): -1}
    # partial against a quadratic coefficient
    d1 = WElement.partial(3, 1)
    q = WElement.basis_term(3, 0b011, 1)
    assert bracket(d1, q).terms == {(0b010, 1): 1}


def test_bracket_with_cartan_reads_weight():
    for t in basis_terms(3):
        h = WElement.matrix_unit(3, 2, 2)
        got = bracket(h, WElement(3, {t: 1}))
        assert got.terms.get(t, 0) == term_weight(t)[2]


def test_grading_element_eigenvalues():
    e = grading_element(4)
    for t in basis_terms(4):
        x = WElement(4, {t: 1})
        got = bracket(e, x)
        want = z_degree(x)
        assert got.terms.get(t, 0) == want or (want == 0 and not got.terms)


def test_borel_orders():
    assert BorelOrder("natural", 4, "min").sequence() == [1, 2, 3, 4]
    assert BorelOrder("interleaved", 5, "min").sequence() == [1, 3, 5, 4, 2]
    assert BorelOrder("interleaved", 4, "max").sequence() == [1, 3, 4, 2]
    nat = BorelOrder("natural", 3, "zero")
    assert set(nat.positive_pairs()) == {(1, 2), (1, 3), (2, 3)}
    assert set(nat.simple_pairs()) == {(1, 2), (2, 3)}
    inter = BorelOrder("interleaved", 4, "zero")
    assert set(inter.simple_pairs()) == {(1, 3), (3, 4), (4, 2)}


def test_raising_terms_extensions():
    n = 3
    lo = raising_terms(BorelOrder("natural", n, "min"))
    assert {t for t in lo if t[0] == 0} == {(0, 1), (0, 2), (0, 3)}
    hi = raising_terms(BorelOrder("natural", n, "max"))
    degs = {len(bin(m).replace("0b", "").replace("0", "")) - 1 for m, _ in hi}
    assert degs >= {1, 2}


def test_generating_terms_generate_the_nilradical():
    """Brackets of the generating set must span every raising term."""
    for kind in ("natural", "interleaved"):
        for ext in ("min", "max"):
            b = BorelOrder(kind, 4, ext)
            gens = [WElement(4, {t: 1}) for t in nilradical_generating_terms(b)]
            span = {t for g in gens for t in g.terms}
            frontier = list(gens)
            while frontier:
                nxt = []
                for g in frontier:
                    for h in gens:
                        for t, c in bracket(g, h).terms.items():
                            if t not in span:
                                span.add(t)
                                nxt.append(WElement(4, {t: c}))
                frontier = nxt
            assert span >= set(raising_terms(b)), (kind, ext)


def test_format_parse_roundtrip():
    rng = random.Random(14)
    for _ in range(50):
        x = random_homogeneous(rng, 4)
        assert parse_welement(format_welement(x), 4) == x
    assert format_welement(WElement(2)) == "0"


def test_weight_of_terms():
    assert term_weight((0b101, 2)) == Weight(((1, 1), (3, 1), (2, -1)))
    assert term_weight((0, 3)) == Weight(((3, -1),))
