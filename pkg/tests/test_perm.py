from itertools import permutations
from math import comb

import pytest

from pipedreams.perm import (
    NotAPermutationError,
    Permutation,
    dominant_singular,
    embed,
    identity,
    local_equations_condition,
    longest_element,
    make_perm,
    multiply,
    zigzag,
)


def inversions(word):
    """Independent double-loop oracle for the length statistic."""
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def condition_oracle(word):
    """Brute-force restatement of the local-equations predicate."""
    m = len(word)
    w0w = [m + 1 - word[i] for i in range(m)]
    inv = [0] * m
    for i, v in enumerate(w0w, start=1):
        inv[v - 1] = i
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j > m and inv[i - 1] > j and w0w[j - 1] > i:
                return False
    return True


class TestMakePerm:
    def test_round_trip(self):
        w = make_perm([1, 4, 3, 2])
        assert w.word == (1, 4, 3, 2)
        assert w.size == 4

    def test_singleton(self):
        assert make_perm([1]).word == (1,)

    def test_duplicate_entry(self):
        with pytest.raises(NotAPermutationError):
            make_perm([2, 2, 3])

    def test_out_of_range_entry(self):
        with pytest.raises(NotAPermutationError):
            make_perm([1, 3])

    def test_empty(self):
        with pytest.raises(NotAPermutationError):
            make_perm([])

    def test_string_round_trip(self):
        w = Permutation.from_string("1,4,3,2")
        assert str(w) == "1,4,3,2"
        with pytest.raises(NotAPermutationError):
            Permutation.from_string("1,a,2")


class TestLength:
    def test_frozen_examples(self):
        assert make_perm([1, 4, 3, 2]).length == 3
        assert identity(5).length == 0
        assert make_perm([2, 1]).length == 1

    def test_against_oracle_s4(self):
        for word in permutations(range(1, 5)):
            assert make_perm(word).length == inversions(word)

    def test_inverse_preserves_length_s4(self):
        for word in permutations(range(1, 5)):
            w = make_perm(word)
            assert w.length == w.inverse().length


class TestZigzag:
    def test_n3(self):
        assert zigzag(3).word == (1, 4, 3, 2)

    def test_n1(self):
        assert zigzag(1).word == (1, 2)

    def test_n4_length(self):
        w = zigzag(4)
        assert w.word == (1, 5, 4, 3, 2)
        assert w.length == comb(4, 2)

    def test_self_inverse(self):
        for n in range(7):
            assert zigzag(n).inverse() == zigzag(n)

    def test_length_closed_form(self):
        for n in range(8):
            assert zigzag(n).length == comb(n, 2)


class TestDominantSingular:
    def test_n2(self):
        assert dominant_singular(2).word == (4, 2, 3, 1)

    def test_n1(self):
        assert dominant_singular(1).word == (3, 2, 1)

    def test_length_matches_brute_force(self):
        for n in range(1, 7):
            w = dominant_singular(n)
            assert w.length == inversions(w.word)

    def test_longest_times_it_is_embedded_zigzag(self):
        for n in range(1, 7):
            lhs = multiply(longest_element(n + 2), dominant_singular(n))
            assert lhs == embed(zigzag(n), n + 2)


class TestGroupOperations:
    def test_composition_convention(self):
        u = make_perm([2, 3, 1])
        w = make_perm([3, 1, 2])
        # (u * w)(i) = u(w(i))
        assert (u * w).word == tuple(u(w(i)) for i in (1, 2, 3))

    def test_inverse_product_is_identity_s4(self):
        for word in permutations(range(1, 5)):
            w = make_perm(word)
            assert w * w.inverse() == identity(4)

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="size mismatch"):
            multiply(identity(3), identity(4))

    def test_longest_element(self):
        assert longest_element(4).word == (4, 3, 2, 1)


class TestEmbed:
    def test_extends_with_fixed_points(self):
        assert embed(make_perm([1, 4, 3, 2]), 5).word == (1, 4, 3, 2, 5)

    def test_identity_case(self):
        w = make_perm([2, 1, 3])
        assert embed(w, w.size) == w

    def test_too_small(self):
        with pytest.raises(ValueError):
            embed(make_perm([1, 4, 3, 2]), 3)


class TestLocalEquationsCondition:
    def test_dominant_singular_family(self):
        for n in range(1, 6):
            assert local_equations_condition(dominant_singular(n))

    def test_identity_s2(self):
        w = identity(2)
        assert condition_oracle(w.word) is True
        assert local_equations_condition(w) is True

    def test_s3_reference_table(self):
        expected = {
            (1, 2, 3): True,
            (1, 3, 2): True,
            (2, 1, 3): True,
            (2, 3, 1): True,
            (3, 1, 2): False,
            (3, 2, 1): True,
        }
        for word, value in expected.items():
            assert local_equations_condition(make_perm(word)) is value
            assert condition_oracle(word) is value

    def test_matches_oracle_on_s4(self):
        for word in permutations(range(1, 5)):
            assert local_equations_condition(make_perm(word)) == condition_oracle(word)
