import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from bruhatcube.perm import (compose, from_cycles, from_word, identity,
                             inverse, is_permutation, length,
                             longest_element, parse_perm, format_perm,
                             transposition)
from bruhatcube.dwd import gen_x, gen_y


def test_compose_identity():
    p = (2, 0, 3, 1)
    assert compose(p, identity(4)) == p
    assert compose(identity(4), p) == p


def test_compose_hypercube_endpoints_give_w0():
    assert compose(gen_x(2), gen_y(2)) == (3, 2, 1, 0)


def test_compose_three_cycle():
    assert compose((1, 2, 0), (1, 2, 0)) == (2, 0, 1)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


def test_inverse_examples():
    assert inverse(identity(5)) == identity(5)
    assert inverse(gen_x(3)) == gen_x(3)
    assert inverse((1, 2, 0)) == (2, 0, 1)


def test_inverse_right_composition():
    rng = random.Random(7)
    for n in (4, 8, 16):
        for _ in range(50):
            img = list(range(n))
            rng.shuffle(img)
            p = tuple(img)
            assert compose(p, inverse(p)) == identity(n)


def test_inverse_is_involution_randomized():
    rng = random.Random(11)
    for n in (4, 8, 16):
        for _ in range(1000):
            img = list(range(n))
            rng.shuffle(img)
            p = tuple(img)
            assert inverse(inverse(p)) == p


def test_length_examples():
    assert length(identity(8)) == 0
    assert length(gen_x(4)) == 44
    assert length(gen_y(4)) == 76


def test_length_complement_under_w0():
    rng = random.Random(3)
    for n in (3, 5, 8):
        w0 = longest_element(n)
        for _ in range(200):
            img = list(range(n))
            rng.shuffle(img)
            p = tuple(img)
            assert length(p) + length(compose(w0, p)) == n * (n - 1) // 2


def test_length_parity_additive():
    rng = random.Random(5)
    for _ in range(300):
        img1 = list(range(6))
        img2 = list(range(6))
        rng.shuffle(img1)
        rng.shuffle(img2)
        p, q = tuple(img1), tuple(img2)
        assert length(compose(p, q)) % 2 == (length(p) + length(q)) % 2


def test_from_word_examples():
    assert from_word(3, []) == (0, 1, 2)
    assert from_word(3, [1]) == (1, 0, 2)
    assert from_word(3, [1, 2]) == (1, 2, 0)


def test_from_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        from_word(3, [0])
    with pytest.raises(ValueError):
        from_word(3, [3])


def test_from_word_surjective_small():
    for n in (2, 3, 4):
        cap = n * (n - 1) // 2
        reached = set()
        for k in range(cap + 1):
            for word in product(range(1, n), repeat=k):
                reached.add(from_word(n, word))
        assert len(reached) == {2: 2, 3: 6, 4: 24}[n]


def test_from_cycles_examples():
    assert from_cycles(4, []) == identity(4)
    swap = from_cycles(12, [(1, 12)])
    assert swap[0] == 11 and swap[11] == 0
    assert all(swap[i] == i for i in range(1, 11))


def test_from_cycles_disjoint_product_oracle():
    # multiply the documented disjoint transpositions by hand
    p = from_cycles(12, [(2, 5), (4, 7), (6, 9), (8, 11)])
    expected = list(range(12))
    for a, b in ((1, 4), (3, 6), (5, 8), (7, 10)):
        expected[a], expected[b] = expected[b], expected[a]
    assert p == tuple(expected)


def test_from_cycles_range_check():
    with pytest.raises(ValueError):
        from_cycles(4, [(0, 2)])
    with pytest.raises(ValueError):
        from_cycles(4, [(1, 5)])


def test_longest_element():
    assert longest_element(2) == (1, 0)
    assert longest_element(4) == (3, 2, 1, 0)
    for n in range(1, 9):
        assert length(longest_element(n)) == n * (n - 1) // 2


def test_transposition_validation():
    with pytest.raises(ValueError):
        transposition(3, 1, 1)
    with pytest.raises(ValueError):
        transposition(3, 0, 3)


def test_parse_format_roundtrip():
    p = parse_perm("0 8 4 12 2 10 6 14 1 9 5 13 3 11 7 15")
    assert p == gen_x(4)
    assert parse_perm(format_perm(p)) == p
    assert parse_perm("2,0,1") == (2, 0, 1)


def test_parse_errors_name_token():
    with pytest.raises(ValueError, match="'x'"):
        parse_perm("0 1 x")
    with pytest.raises(ValueError):
        parse_perm("0 0 1")
    with pytest.raises(ValueError):
        parse_perm("")


@given(st.permutations(list(range(6))))
def test_inverse_compose_roundtrip_property(img):
    p = tuple(img)
    assert is_permutation(p)
    assert compose(inverse(p), p) == identity(6)
    assert inverse(inverse(p)) == p


@given(st.permutations(list(range(5))), st.permutations(list(range(5))))
def test_compose_inverse_antihomomorphism(img1, img2):
    p, q = tuple(img1), tuple(img2)
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
