import math

import pytest

from hochflag.errors import ResourceLimitError
from hochflag.weyl import (
    all_permutations,
    apply_right_generator,
    check_window,
    compose,
    identity,
    inverse,
    length,
    length_generating_function,
    longest_element,
    reduced_word,
)

from conftest import random_permutation


def test_compose_examples():
    assert compose((2, 1), (2, 1)) == (1, 2)
    assert compose(identity(3), (3, 1, 2)) == (3, 1, 2)
    assert compose((2, 3, 1), (2, 3, 1)) == (3, 1, 2)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose((2, 1), (1, 2, 3))


def test_compose_is_function_composition():
    u = (3, 1, 2)
    v = (2, 3, 1)
    w = compose(u, v)
    for i in range(1, 4):
        assert w[i - 1] == u[v[i - 1] - 1]


def test_inverse_examples():
    assert inverse((2, 1)) == (2, 1)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert inverse(identity(4)) == identity(4)


def test_length_examples():
    assert length((1, 2, 3)) == 0
    assert length((2, 1)) == 1
    assert length((3, 2, 1)) == 3


def test_longest_element():
    assert longest_element(1) == (1,)
    assert longest_element(2) == (2, 1)
    assert longest_element(4) == (4, 3, 2, 1)
    for n in range(1, 7):
        w0 = longest_element(n)
        assert length(w0) == n * (n - 1) // 2
        assert inverse(w0) == w0


def test_all_permutations_counts():
    assert all_permutations(1) == [(1,)]
    assert all_permutations(2) == [(1, 2), (2, 1)]
    perms = all_permutations(3)
    assert len(perms) == 6
    assert len(set(perms)) == 6
    assert perms == sorted(perms)


def test_all_permutations_cap():
    with pytest.raises(ResourceLimitError):
        all_permutations(9)


def test_check_window_rejects_bad_input():
    with pytest.raises(ValueError):
        check_window((1, 1, 2))
    with pytest.raises(ValueError):
        check_window((0, 1))


def test_reduced_word_examples():
    assert reduced_word(identity(3)) == ()
    assert reduced_word((2, 1)) == (1,)
    assert reduced_word((3, 2, 1)) == (1, 2, 1)


def test_reduced_word_reconstructs(rng):
    for n in range(1, 7):
        for _ in range(30):
            w = random_permutation(rng, n)
            word = reduced_word(w)
            assert len(word) == length(w)
            cur = identity(n)
            for i in word:
                cur = apply_right_generator(cur, i)
            assert cur == w


def test_length_subadditive_mod_two(rng):
    for n in range(2, 7):
        for _ in range(40):
            u = random_permutation(rng, n)
            v = random_permutation(rng, n)
            lu, lv, luv = length(u), length(v), length(compose(u, v))
            assert luv <= lu + lv
            assert (luv - lu - lv) % 2 == 0


def test_length_invariant_under_inverse(rng):
    for n in range(2, 7):
        for _ in range(20):
            w = random_permutation(rng, n)
            assert length(w) == length(inverse(w))
            assert compose(w, inverse(w)) == identity(n)


def test_length_generating_function():
    assert length_generating_function(1).coefficients == (1,)
    assert length_generating_function(2).coefficients == (1, 1)
    assert length_generating_function(3).coefficients == (1, 2, 2, 1)
    for n in range(1, 8):
        lgf = length_generating_function(n)
        assert lgf.evaluate(1) == math.factorial(n)


def test_length_generating_function_matches_enumeration():
    for n in range(1, 6):
        hist = {}
        for w in all_permutations(n):
            hist[length(w)] = hist.get(length(w), 0) + 1
        lgf = length_generating_function(n)
        assert lgf.coefficients == tuple(hist[k] for k in range(max(hist) + 1))
