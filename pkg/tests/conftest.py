"""
Shared fixtures: the named permutations and a word strategy
"""
import pytest
from hypothesis import strategies as st

from services import catalog
from services.words import Word


@pytest.fixture
def sigma0():
    return catalog.nakanishi()


@pytest.fixture
def psi12():
    return catalog.psi12()


@pytest.fixture
def e42():
    return catalog.e42()


@pytest.fixture
def e32_swap():
    return catalog.e32_swap()


def w(text: str, alphabet_size: int) -> Word:
    """Word from a digit string"""
    return Word(alphabet_size, tuple(int(c) for c in text))


@st.composite
def words(draw, min_alphabet: int = 2, max_alphabet: int = 4, max_size: int = 8):
    """Arbitrary words over a random alphabet"""
    n = draw(st.integers(min_value=min_alphabet, max_value=max_alphabet))
    letters = draw(st.lists(st.integers(min_value=1, max_value=n), min_size=1, max_size=max_size))
    return Word(n, tuple(letters))
