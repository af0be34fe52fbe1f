"""Permutation calculus and the arity-4 homotopies built from the two embeddings."""

import pytest

from cartan.barratt_eccles import (ID2, MID_SWAP4, SWAP2, be_boundary,
                                   be_compose, block_compose, cartan_homotopy,
                                   compose_perm, cup_generator, diag_embed,
                                   diagonal_homotopy, embedding_homotopy,
                                   identity_perm, nerve_map, outer_embed,
                                   product_of_squares, sigma_act,
                                   squared_product, transposition)
from cartan.f2 import F2Sum, ZERO, hom_boundary, singleton
from cartan.simplicial import aw, product

E4 = identity_perm(4)
P23 = (1, 3, 2, 4)
P12_34 = (2, 1, 4, 3)
P34 = (1, 2, 4, 3)
P12 = (2, 1, 3, 4)


def test_compose_applies_the_right_factor_first():
    assert compose_perm(P23, P12) == (3, 1, 2, 4)
    # the pin for the whole convention: (23)(13)(24) in cycle notation
    chain = compose_perm(P23, compose_perm((3, 2, 1, 4), (1, 4, 3, 2)))
    assert chain == (2, 4, 1, 3)
    assert compose_perm(SWAP2, SWAP2) == ID2


def test_perm_constructors():
    assert identity_perm(3) == (1, 2, 3)
    assert transposition(4, 2, 3) == P23 == MID_SWAP4
    with pytest.raises(ValueError):
        transposition(2, 1, 3)


def test_block_compose_vectors():
    assert block_compose(SWAP2, (ID2, ID2)) == (3, 4, 1, 2)
    assert block_compose(ID2, (SWAP2, SWAP2)) == P12_34
    assert block_compose(ID2, ((1, 2, 3), SWAP2)) == (1, 2, 3, 5, 4)
    assert block_compose((2, 1, 3), ((1,), (2, 1), (1,))) == (3, 2, 1, 4)


def test_embeddings():
    assert outer_embed(ID2) == E4
    assert outer_embed(SWAP2) == (3, 4, 1, 2)
    assert diag_embed(ID2) == E4
    assert diag_embed(SWAP2) == P12_34


def test_cup_generator_shape():
    assert cup_generator(0) == (ID2,)
    assert cup_generator(2) == (ID2, SWAP2, ID2)
    with pytest.raises(ValueError):
        cup_generator(-1)


def test_cup_generator_boundary():
    # d(generator_i) = swapped generator_{i-1} + generator_{i-1}
    for i in (1, 2, 3):
        lower = singleton(cup_generator(i - 1))
        want = sigma_act(SWAP2, lower) + lower
        assert be_boundary(singleton(cup_generator(i))) == want


def test_sigma_act_normalizes():
    c = singleton((ID2, SWAP2))
    assert sigma_act(SWAP2, c) == singleton((SWAP2, ID2))
    with pytest.raises(ValueError):
        sigma_act((1, 2, 3), c)
    # a constant entry map collapses every term
    assert nerve_map(lambda s: E4, singleton((E4, P23))) == ZERO


def test_be_compose_identity_slots():
    unit = singleton(cup_generator(0))
    # identities in both slots land the element on its outer embedding
    for i in (0, 1, 2):
        c = singleton(cup_generator(i))
        assert be_compose(cup_generator(i), unit, unit) == nerve_map(outer_embed, c)


def test_be_compose_respects_boundaries():
    # d(e o (a, b)) = (de) o (a, b) + e o (da, b) + e o (a, db)
    e = cup_generator(1)
    a = singleton(cup_generator(1))
    b = singleton((SWAP2,))
    lhs = be_boundary(be_compose(e, a, b))
    rhs = (be_boundary(singleton(e)).map_basis(lambda t: be_compose(t, a, b))
           + be_compose(e, be_boundary(a), b)
           + be_compose(e, a, be_boundary(b)))
    assert lhs == rhs


def test_squared_product_is_the_outer_nerve_map():
    for i in range(4):
        c = singleton(cup_generator(i))
        assert squared_product(c) == nerve_map(outer_embed, c)


def test_product_of_squares_degree_zero():
    assert product_of_squares(singleton(cup_generator(0))) == singleton((E4,))


def test_aw_splits_the_doubled_generator():
    # front j-prefix tensor swap-twisted (i-j)-suffix, no cancellation
    xi = cup_generator(2)
    doubled = singleton(product(xi, xi))
    assert aw(doubled) == F2Sum((xi[:j + 1], xi[j:]) for j in range(3))


def test_homotopy_goldens_small():
    x0, x1 = singleton(cup_generator(0)), singleton(cup_generator(1))
    assert embedding_homotopy(x0) == singleton((P23, E4))
    assert diagonal_homotopy(x0) == ZERO
    assert cartan_homotopy(x0) == embedding_homotopy(x0)
    assert embedding_homotopy(x1) == F2Sum([
        (P23, E4, P12_34), (P23, (2, 4, 1, 3), P12_34)])
    assert diagonal_homotopy(x1) == singleton((E4, P34, P12_34))


def test_homotopy_boundaries_small():
    d_h1 = hom_boundary(embedding_homotopy, be_boundary, be_boundary)
    d_h2 = hom_boundary(diagonal_homotopy, be_boundary, be_boundary)
    for i in range(3):
        c = singleton(cup_generator(i))
        assert d_h1(c) == sigma_act(MID_SWAP4, squared_product(c)) + nerve_map(diag_embed, c)
        assert d_h2(c) == nerve_map(diag_embed, c) + product_of_squares(c)


def test_homotopy_equivariance_small():
    twist = diag_embed(SWAP2)
    for i in range(3):
        c = singleton(cup_generator(i))
        flipped = sigma_act(SWAP2, c)
        assert embedding_homotopy(flipped) == sigma_act(twist, embedding_homotopy(c))
        assert diagonal_homotopy(flipped) == sigma_act(twist, diagonal_homotopy(c))
