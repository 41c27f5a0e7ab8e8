"""Tangential derivations: action, bracket, divergence, braids, extensions."""
import random
from fractions import Fraction

import pytest

from kvlie.cyclic import CycSeries
from kvlie.derivations import (BraidGenerator, TDer, braid_bracket_basis,
                               braid_embed, classify, divergence,
                               parse_pattern, tder_bracket, tder_extend,
                               tn_membership)
from kvlie.lie import LieSeries
from kvlie.lyndon import lyndon_basis
from kvlie.words import Alphabet

from test_lie import rand_lie

A2 = Alphabet(2)


def rand_tder(rng, alphabet, degree):
    return TDer([rand_lie(rng, alphabet, degree) for _ in range(alphabet.n)])


def test_normalization_projects_linear_term():
    x = LieSeries.generator(A2, 3, 0)
    y = LieSeries.generator(A2, 3, 1)
    u = TDer([x + y, x])
    assert u.components[0] == y  # the x part of a_1 is dropped
    with pytest.raises(ValueError):
        TDer([x + y, x], strict=True)


def test_action_is_derivation():
    rng = random.Random(51)
    for _ in range(6):
        u = rand_tder(rng, A2, 5)
        a = rand_lie(rng, A2, 5).to_assoc()
        b = rand_lie(rng, A2, 5).to_assoc()
        assert u.apply_assoc(a * b) == \
            u.apply_assoc(a) * b + a * u.apply_assoc(b)


def test_bracket_matches_action_commutator():
    rng = random.Random(52)
    for _ in range(6):
        u = rand_tder(rng, A2, 5)
        v = rand_tder(rng, A2, 5)
        w = tder_bracket(u, v)
        for i in range(2):
            xi = LieSeries.generator(A2, 5, i)
            assert w.apply(xi) == u.apply(v.apply(xi)) - v.apply(u.apply(xi))


def test_divergence_cocycle():
    rng = random.Random(53)
    for _ in range(10):
        u = rand_tder(rng, A2, 5)
        v = rand_tder(rng, A2, 5)
        lhs = divergence(tder_bracket(u, v))
        rhs = u.apply(divergence(v)) - v.apply(divergence(u))
        assert lhs == rhs


def test_divergence_example():
    x = LieSeries.generator(A2, 3, 0)
    y = LieSeries.generator(A2, 3, 1)
    u = TDer([x.bracket(y), LieSeries.zero(A2, 3)])
    assert divergence(u) == CycSeries(A2, 3, {(0, 1): Fraction(-1)})


def test_classify_iris():
    x = LieSeries.generator(A2, 4, 0)
    y = LieSeries.generator(A2, 4, 1)
    flags = classify(TDer([y, x]))
    assert flags.special and flags.krv and flags.witness_degree is None


def test_classify_witnesses():
    y = LieSeries.generator(A2, 4, 1)
    not_special = classify(TDer([y, LieSeries.zero(A2, 4)]))
    assert not not_special.special
    assert not not_special.krv
    assert not_special.witness_degree == 2


def test_pattern_parsing():
    groups, m = parse_pattern("12,3")
    assert groups == ((1, 2), (3,)) and m == 3
    groups, m = parse_pattern("1,23", 4)
    assert groups == ((1,), (2, 3)) and m == 4
    with pytest.raises(ValueError):
        parse_pattern("1,1")
    with pytest.raises(ValueError):
        parse_pattern("12,3", 2)


def test_extension_is_lie_homomorphism():
    rng = random.Random(54)
    for pattern in ("1,2", "12,3", "1,23", "3,1,2"):
        for _ in range(3):
            n_groups = pattern.count(",") + 1
            alph = Alphabet(n_groups)
            u = rand_tder(rng, alph, 4)
            v = rand_tder(rng, alph, 4)
            eu = tder_extend(u, pattern)
            ev = tder_extend(v, pattern)
            assert tder_extend(tder_bracket(u, v), pattern) == \
                tder_bracket(eu, ev)


def test_braid_embed_components():
    t12 = braid_embed(BraidGenerator(1, 2, 3), 3)
    a3 = Alphabet(3)
    assert t12.components[0] == LieSeries.generator(a3, 3, 1)
    assert t12.components[1] == LieSeries.generator(a3, 3, 0)
    assert not t12.components[2]


def test_braid_relations():
    degree = 5
    for n in (3, 4):
        t = {(i, j): braid_embed(BraidGenerator(i, j, n), degree)
             for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        # locality: disjoint index pairs commute
        if n == 4:
            assert not tder_bracket(t[(1, 2)], t[(3, 4)])
            assert not tder_bracket(t[(1, 3)], t[(2, 4)])
        # 3-term relations
        for (i, j, k) in [(1, 2, 3)] + ([(1, 2, 4), (2, 3, 4)] if n == 4 else []):
            assert not tder_bracket(t[(i, j)], t[(i, k)] + t[(j, k)])


def test_central_element():
    degree = 5
    t = {(i, j): braid_embed(BraidGenerator(i, j, 3), degree)
         for i, j in [(1, 2), (1, 3), (2, 3)]}
    c = t[(1, 2)] + t[(1, 3)] + t[(2, 3)]
    for u in t.values():
        assert not tder_bracket(c, u)


def test_tn_membership():
    degree = 4
    t12 = braid_embed(BraidGenerator(1, 2, 3), degree)
    t23 = braid_embed(BraidGenerator(2, 3, 3), degree)
    w = tder_bracket(t12, t23)
    coords = tn_membership(w)
    assert coords is not None
    rebuilt = TDer.zero(Alphabet(3), degree)
    basis = dict(braid_bracket_basis(3, 2, degree))
    for lbl, c in coords:
        if c:
            rebuilt = rebuilt + basis[lbl].scale(c)
    assert rebuilt == w
    # something outside the span
    x = LieSeries.generator(Alphabet(3), degree, 0)
    z = LieSeries.zero(Alphabet(3), degree)
    outside = TDer([z, x.bracket(LieSeries.generator(Alphabet(3), degree, 2)), z])
    assert tn_membership(outside, 2) is None
