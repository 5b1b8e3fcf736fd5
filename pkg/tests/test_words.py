import pytest
from hypothesis import given, settings, strategies as st

from config.config import MAX_WORD_LENGTH
from services.words import (
    Word,
    canonical,
    concat,
    count_letter,
    cyclically_equivalent,
    format_word,
    is_canonical,
    is_nonperiodic,
    lyndon_words,
    parse_word,
    power,
    precedes,
    primitive_root,
    rotate,
    sort_key,
    value,
)
from tests.conftest import w, words
from utils.errors import AlphabetMismatchError, WordError


class TestWord:
    def test_rejects_empty(self):
        with pytest.raises(WordError):
            Word(2, ())

    def test_rejects_letter_out_of_range(self):
        with pytest.raises(WordError):
            Word(2, (1, 3))
        with pytest.raises(WordError):
            Word(2, (0,))

    def test_rejects_alphabet_of_one(self):
        with pytest.raises(WordError):
            Word(1, (1,))

    def test_sequence_protocol(self):
        word = w("123", 3)
        assert len(word) == 3
        assert list(word) == [1, 2, 3]
        assert word[1] == 2
        assert str(word) == "123"


class TestTextForm:
    def test_digit_form(self):
        assert parse_word("113223", 3) == w("113223", 3)
        assert format_word(w("113223", 3)) == "113223"

    def test_comma_and_parenthesized_forms(self):
        assert parse_word("(1, 2, 3)", 3) == w("123", 3)
        assert parse_word("1,1,3", 3) == w("113", 3)

    def test_large_alphabet_uses_commas(self):
        word = parse_word("1,10,3", 12)
        assert word.letters == (1, 10, 3)
        assert format_word(word) == "1,10,3"

    def test_large_alphabet_token_without_commas_is_one_letter(self):
        assert parse_word("12", 12).letters == (12,)

    def test_unreadable_text(self):
        for text in ("", "1a", "1,,2", "0"):
            with pytest.raises(WordError):
                parse_word(text, 3)

    def test_letter_above_alphabet(self):
        with pytest.raises(AlphabetMismatchError):
            parse_word("14", 3)

    def test_input_length_is_capped(self):
        assert len(parse_word("12" * (MAX_WORD_LENGTH // 2), 2)) == MAX_WORD_LENGTH
        with pytest.raises(WordError):
            parse_word("1" * (MAX_WORD_LENGTH + 1), 2)

    def test_built_words_are_not_capped(self):
        word = power(w("12", 2), MAX_WORD_LENGTH)
        assert len(word) == 2 * MAX_WORD_LENGTH


class TestBuilding:
    def test_concat_and_power(self):
        assert concat(w("12", 3), w("3", 3)) == w("123", 3)
        assert power(w("12", 2), 3) == w("121212", 2)

    def test_power_must_be_positive(self):
        with pytest.raises(WordError):
            power(w("1", 2), 0)

    def test_concat_across_alphabets(self):
        with pytest.raises(AlphabetMismatchError):
            concat(w("1", 2), w("1", 3))

    def test_rotate(self):
        assert rotate(w("123", 3), 1) == w("231", 3)
        assert rotate(w("123", 3), -1) == w("312", 3)
        assert rotate(w("123", 3), 3) == w("123", 3)

    def test_count_letter(self):
        assert count_letter(w("1122", 2), 1) == 2


class TestOrder:
    def test_value_is_base_n(self):
        assert value(w("1", 3)) == 0
        assert value(w("12", 3)) == 1
        assert value(w("33", 3)) == 8

    def test_precedes(self):
        assert precedes(w("12", 2), w("21", 2))
        assert not precedes(w("21", 2), w("12", 2))
        assert precedes(w("12", 2), w("12", 2))

    def test_precedes_needs_equal_lengths(self):
        with pytest.raises(AlphabetMismatchError):
            precedes(w("1", 2), w("12", 2))

    def test_sort_key_orders_by_length_first(self):
        assert sorted([w("12", 2), w("2", 2), w("1", 2)], key=sort_key) == [w("1", 2), w("2", 2), w("12", 2)]


class TestPeriodicity:
    def test_primitive_root(self):
        assert primitive_root(w("1212", 2)) == (w("12", 2), 2)
        assert primitive_root(w("111", 2)) == (w("1", 2), 3)
        assert primitive_root(w("121", 2)) == (w("121", 2), 1)
        assert primitive_root(w("131313", 3)) == (w("13", 3), 3)

    def test_is_nonperiodic(self):
        assert is_nonperiodic(w("113223", 3))
        assert not is_nonperiodic(w("222", 3))


class TestCanonical:
    def test_least_rotation(self):
        assert canonical(w("231", 3)) == w("123", 3)
        assert canonical(w("211", 2)) == w("112", 2)
        assert canonical(w("21", 2)) == w("12", 2)

    def test_cyclic_equivalence(self):
        assert cyclically_equivalent(w("1122", 2), w("2211", 2))
        assert not cyclically_equivalent(w("1122", 2), w("1212", 2))
        assert not cyclically_equivalent(w("12", 2), w("121", 2))

    def test_lyndon_words_binary(self):
        found = [format_word(word) for word in lyndon_words(2, 4)]
        assert found == ["1", "2", "12", "112", "122", "1112", "1122", "1222"]

    def test_lyndon_word_counts(self):
        # necklace counts of aperiodic words: 3 + 3 + 8 for N = 3
        assert len(lyndon_words(3, 3)) == 14
        assert lyndon_words(2, 0) == []

    def test_lyndon_words_are_canonical_and_nonperiodic(self):
        for word in lyndon_words(3, 5):
            assert is_canonical(word)
            assert is_nonperiodic(word)


@settings(max_examples=200, deadline=None)
@given(words(), st.integers(min_value=-20, max_value=20), st.integers(min_value=-20, max_value=20))
def test_rotations_compose(word, a, b):
    assert rotate(rotate(word, a), b) == rotate(word, a + b)


@settings(max_examples=200, deadline=None)
@given(words(), st.integers(min_value=0, max_value=20))
def test_canonical_is_rotation_invariant_least_rotation(word, shift):
    rotations = [rotate(word, s) for s in range(len(word))]
    assert canonical(word) == min(rotations, key=value)
    assert canonical(rotate(word, shift)) == canonical(word)
    assert is_canonical(canonical(word))


@settings(max_examples=200, deadline=None)
@given(words())
def test_primitive_root_power_reconstructs(word):
    root, r = primitive_root(word)
    assert power(root, r) == word
    assert is_nonperiodic(root)


@settings(max_examples=100, deadline=None)
@given(words())
def test_text_form_reads_back(word):
    assert parse_word(format_word(word), word.alphabet_size) == word
