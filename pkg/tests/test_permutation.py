import random

import pytest
from hypothesis import given, settings, strategies as st

from services.permutation import (
    MultiIndexPermutation,
    apply,
    canonical_shift,
    components,
    compose,
    count_permutations,
    enumerate_permutations,
    fingerprint,
    from_pairs,
    identity,
    inverse,
    is_automorphism,
    rank,
    to_pairs,
    transposition,
    unrank,
)
from tests.conftest import w
from utils.errors import AlphabetMismatchError, GuardExceededError, PermutationError


def random_sigma(rng: random.Random, n: int, l: int) -> MultiIndexPermutation:
    size = n ** l
    return MultiIndexPermutation(n, l, tuple(rng.sample(range(size), size)))


class TestTable:
    def test_rejects_non_bijection(self):
        with pytest.raises(PermutationError):
            MultiIndexPermutation(2, 1, (0, 0))

    def test_rejects_wrong_size(self):
        with pytest.raises(PermutationError):
            MultiIndexPermutation(2, 2, (0, 1, 2))

    def test_apply_nakanishi(self, sigma0):
        assert apply(sigma0, w("11", 3)) == w("23", 3)
        assert apply(sigma0, w("33", 3)) == w("33", 3)
        assert sigma0(w("31", 3)) == w("11", 3)

    def test_apply_checks_shape(self, sigma0):
        with pytest.raises(AlphabetMismatchError):
            apply(sigma0, w("11", 2))
        with pytest.raises(PermutationError):
            apply(sigma0, w("1", 3))

    def test_components(self, sigma0):
        assert components(sigma0, w("11", 3), 1, 1) == w("2", 3)
        assert components(sigma0, w("11", 3), 2, 2) == w("3", 3)
        with pytest.raises(PermutationError):
            components(sigma0, w("11", 3), 2, 3)


class TestRank:
    def test_rank_is_big_endian(self):
        assert rank(w("21", 3)) == 3
        assert unrank(3, 2, 3) == w("21", 3)

    def test_unrank_out_of_range(self):
        with pytest.raises(PermutationError):
            unrank(2, 2, 4)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=4), st.data())
def test_rank_unrank_inverse(n, length, data):
    r = data.draw(st.integers(min_value=0, max_value=n ** length - 1))
    assert rank(unrank(n, length, r)) == r


class TestAlgebra:
    def test_inverse(self, sigma0):
        assert compose(sigma0, inverse(sigma0)) == identity(3, 2)
        assert compose(inverse(sigma0), sigma0) == identity(3, 2)

    def test_compose_applies_right_factor_first(self):
        rng = random.Random(7)
        for _ in range(20):
            s1, s2 = random_sigma(rng, 2, 2), random_sigma(rng, 2, 2)
            product = compose(s1, s2)
            for r in range(4):
                word = unrank(2, 2, r)
                assert apply(product, word) == apply(s1, apply(s2, word))

    def test_compose_shape_mismatch(self):
        with pytest.raises(PermutationError):
            compose(identity(2, 2), identity(2, 1))

    def test_pairs(self, sigma0):
        assert from_pairs(3, 2, to_pairs(sigma0)) == sigma0

    def test_from_pairs_duplicate_input(self):
        pairs = [(w("1", 2), w("1", 2)), (w("1", 2), w("2", 2))]
        with pytest.raises(PermutationError):
            from_pairs(2, 1, pairs)

    def test_from_pairs_missing_input(self):
        with pytest.raises(PermutationError):
            from_pairs(2, 1, [(w("1", 2), w("1", 2))])

    def test_from_pairs_repeated_image(self):
        pairs = [(w("1", 2), w("1", 2)), (w("2", 2), w("1", 2))]
        with pytest.raises(PermutationError):
            from_pairs(2, 1, pairs)


class TestBuilders:
    def test_canonical_shift_swaps_letters(self):
        sigma = canonical_shift(3)
        assert sigma.table[:4] == (0, 3, 6, 1)
        assert apply(sigma, w("12", 3)) == w("21", 3)
        assert apply(sigma, w("33", 3)) == w("33", 3)

    def test_transposition(self):
        sigma = transposition(2, 2, w("11", 2), w("12", 2))
        assert sigma.table == (1, 0, 2, 3)

    def test_transposition_needs_distinct_words(self):
        with pytest.raises(PermutationError):
            transposition(2, 2, w("11", 2), w("11", 2))
        with pytest.raises(PermutationError):
            transposition(2, 2, w("11", 2), w("1", 2))


class TestEnumeration:
    def test_counts(self):
        assert count_permutations(2, 2) == 24
        assert count_permutations(3, 1) == 6

    def test_enumerates_all_tables_identity_first(self):
        found = list(enumerate_permutations(2, 2))
        assert len(found) == 24
        assert len(set(found)) == 24
        assert found[0] == identity(2, 2)

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            list(enumerate_permutations(2, 4))

    def test_guard_override_with_cap(self):
        found = list(enumerate_permutations(2, 4, cap=3, allow_large=True))
        assert len(found) == 3


class TestQueries:
    def test_fingerprint_is_stable_and_discriminating(self, sigma0, psi12):
        assert fingerprint(sigma0) == fingerprint(inverse(inverse(sigma0)))
        assert fingerprint(sigma0) != fingerprint(identity(3, 2))
        assert fingerprint(identity(2, 2)) != fingerprint(identity(4, 1))
        assert len(fingerprint(psi12)) == 12

    def test_is_automorphism(self, sigma0):
        assert is_automorphism(identity(3, 1))
        assert not is_automorphism(sigma0)
