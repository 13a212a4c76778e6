"""The finite unitary rotation group and its word table."""

import random

import pytest

from picard31.eisenstein import OMEGA, ONE, ZERO, EisensteinInt
from picard31.errors import NotMemberError
from picard31.finite_unitary import (U1, U2, FiniteUnitary, UGen,
                                     enumerate_group, evaluate_uword, identity,
                                     serialize_uword, u_decompose,
                                     u_membership, word_table)


def test_generators_are_members():
    assert u_membership(U1.rows)
    assert u_membership(U2.rows)
    assert U1 * U1 == identity()
    assert U2 ** 6 == identity()
    for j in range(1, 6):
        assert U2 ** j != identity()


def test_membership_rejects():
    assert not u_membership(((ONE, ONE), (ZERO, ONE)))
    assert not u_membership(((EisensteinInt(2), ZERO), (ZERO, ONE)))
    assert not u_membership(((ZERO, ZERO), (ZERO, ZERO)))
    with pytest.raises(NotMemberError):
        FiniteUnitary(((ONE, ONE), (ZERO, ONE)))


def test_group_order():
    grp = enumerate_group()
    assert len(grp) == 72
    # Closed under product and inverse.
    rng = random.Random(1)
    elements = sorted(grp, key=lambda u: tuple((e.a, e.b)
                                               for row in u.rows for e in row))
    for _ in range(200):
        x, y = rng.choice(elements), rng.choice(elements)
        assert x * y in grp
        assert x.conj_transpose() in grp


def test_conj_transpose_is_inverse():
    for u in enumerate_group():
        assert u * u.conj_transpose() == identity()
        assert u.inverse() == u.conj_transpose()


def test_word_table_covers_group():
    tbl = word_table()
    assert len(tbl) == 72
    for u, word in tbl.items():
        assert evaluate_uword(word) == u
        # Canonical exponents: U1 appears only to the first power, U2 within
        # the symmetric range, never zero, never two equal letters adjacent.
        for i, (gen, exp) in enumerate(word):
            assert exp != 0
            if gen is UGen.U1:
                assert exp == 1
            else:
                assert -2 <= exp <= 3
            if i:
                assert word[i - 1][0] is not gen


def test_u_decompose_round_trip():
    for u in enumerate_group():
        assert evaluate_uword(u_decompose(u)) == u


def test_u_decompose_fixed_case():
    u = FiniteUnitary(((ONE, ZERO), (ZERO, -OMEGA)))
    word = u_decompose(u)
    assert serialize_uword(word) == "U1 U2 U1"
    assert u_decompose(identity()) == ()


def test_u_decompose_rejects_non_member():
    with pytest.raises(NotMemberError):
        u_decompose("not a matrix")


def test_evaluate_uword_matches_products():
    rng = random.Random(2)
    mats = {UGen.U1: U1, UGen.U2: U2}
    for _ in range(100):
        word = tuple((rng.choice((UGen.U1, UGen.U2)), rng.choice((-2, -1, 1, 2, 3)))
                     for _ in range(rng.randint(0, 8)))
        acc = identity()
        for gen, exp in word:
            acc = acc * mats[gen] ** exp
        assert evaluate_uword(word) == acc


def test_json_round_trip():
    for u in enumerate_group():
        assert FiniteUnitary.from_json(u.to_json()) == u
