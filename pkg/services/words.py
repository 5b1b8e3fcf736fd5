"""
Multi-indices J ∈ {1,…,N}^k: rotations, cyclic equivalence, the ≺ order,
periodicity and canonical (least-rotation) representatives
"""
from dataclasses import dataclass
from typing import Iterator, Sequence

from config.config import DIGIT_TEXT_MAX_ALPHABET, MAX_ALPHABET_SIZE, MAX_WORD_LENGTH
from utils.errors import AlphabetMismatchError, WordError


@dataclass(frozen=True)
class Word:
    """A nonempty word over the alphabet {1,…,N}"""

    alphabet_size: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if not 2 <= self.alphabet_size <= MAX_ALPHABET_SIZE:
            raise WordError(f"Alphabet size must lie in 2..{MAX_ALPHABET_SIZE}, got {self.alphabet_size}")
        if not self.letters:
            raise WordError("Words must have at least one letter")
        for letter in self.letters:
            if not 1 <= letter <= self.alphabet_size:
                raise WordError(f"Letter {letter} outside 1..{self.alphabet_size}")

    @classmethod
    def of(cls, alphabet_size: int, letters: Sequence[int]) -> "Word":
        """Build a word from any sequence of letters"""
        return cls(alphabet_size, tuple(int(letter) for letter in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __str__(self) -> str:
        return format_word(self)


def _check_same_alphabet(w1: Word, w2: Word) -> None:
    if w1.alphabet_size != w2.alphabet_size:
        raise AlphabetMismatchError(
            f"Words over different alphabets: N={w1.alphabet_size} vs N={w2.alphabet_size}"
        )


# ==================== Text Form ====================
def format_word(w: Word) -> str:
    """
    Render a word in text form

    Digit string ("113223") for small alphabets, comma separated ("10,2,3")
    otherwise.
    """
    if w.alphabet_size <= DIGIT_TEXT_MAX_ALPHABET:
        return "".join(str(letter) for letter in w.letters)
    return ",".join(str(letter) for letter in w.letters)


def parse_word(text: str, alphabet_size: int) -> Word:
    """
    Parse the text form of a word

    Args:
        text: "113223", "1,1,3", "(1,2)" or, for N ≥ 10, "12" as one letter
        alphabet_size: N

    Returns:
        Parsed word

    Raises:
        WordError: unreadable text, or longer than MAX_WORD_LENGTH
        AlphabetMismatchError: a letter above N
    """
    cleaned = text.strip().strip("()").replace(" ", "")
    if not cleaned:
        raise WordError(f"Empty word text {text!r}")

    if "," in cleaned:
        tokens = cleaned.split(",")
    elif alphabet_size <= DIGIT_TEXT_MAX_ALPHABET:
        tokens = list(cleaned)
    else:
        # without commas a large-alphabet token is a single letter
        tokens = [cleaned]

    if len(tokens) > MAX_WORD_LENGTH:
        raise WordError(f"Words longer than {MAX_WORD_LENGTH} letters are not supported")

    letters = []
    for token in tokens:
        if not token.isdigit() or int(token) < 1:
            raise WordError(f"Cannot read letter {token!r} in word {text!r}")
        letters.append(int(token))
    if max(letters) > alphabet_size:
        raise AlphabetMismatchError(f"Word {text!r} uses letter {max(letters)} outside 1..{alphabet_size}")
    return Word.of(alphabet_size, letters)


# ==================== Building Words ====================
def concat(w1: Word, w2: Word) -> Word:
    """J_1 ∪ J_2"""
    _check_same_alphabet(w1, w2)
    return Word(w1.alphabet_size, w1.letters + w2.letters)


def power(w: Word, r: int) -> Word:
    """J^r = J ∪ ⋯ ∪ J (r times)"""
    if r < 1:
        raise WordError(f"Power must be at least 1, got {r}")
    return Word(w.alphabet_size, w.letters * r)


def rotate(w: Word, shift: int) -> Word:
    """
    Cyclic shift: position 1 moves to position 1+shift (mod k)

    rotate((1,2,3), 1) = (2,3,1) and rotate(rotate(w,a),b) = rotate(w,a+b).
    """
    k = len(w.letters)
    s = shift % k
    return Word(w.alphabet_size, w.letters[s:] + w.letters[:s])


def count_letter(w: Word, letter: int) -> int:
    """Number of occurrences of a letter"""
    return w.letters.count(letter)


# ==================== Order ====================
def value(w: Word) -> int:
    """
    Base-N position value Σ (j_l − 1)·N^{k−l}

    For equal lengths J_1 ≺ J_2 iff value(J_1) ≤ value(J_2). Python integers
    are unbounded, so long words never overflow.
    """
    total = 0
    n = w.alphabet_size
    for letter in w.letters:
        total = total * n + (letter - 1)
    return total


def precedes(w1: Word, w2: Word) -> bool:
    """
    The ≺ order (defined for words of equal length only)

    Raises:
        AlphabetMismatchError: different alphabets or lengths
    """
    _check_same_alphabet(w1, w2)
    if len(w1) != len(w2):
        raise AlphabetMismatchError(
            f"≺ compares words of equal length only ({len(w1)} vs {len(w2)})"
        )
    return value(w1) <= value(w2)


def sort_key(w: Word) -> tuple[int, int]:
    """(length, value) ordering used for components and sweeps"""
    return len(w.letters), value(w)


# ==================== Periodicity ====================
def primitive_root(w: Word) -> tuple[Word, int]:
    """
    Decompose w = J_0^r with J_0 nonperiodic

    Returns:
        (J_0, r)
    """
    letters = w.letters
    k = len(letters)

    # prefix function: the shortest period p divides k iff k is a multiple of it
    border = [0] * k
    for i in range(1, k):
        j = border[i - 1]
        while j > 0 and letters[i] != letters[j]:
            j = border[j - 1]
        if letters[i] == letters[j]:
            j += 1
        border[i] = j

    period = k - border[-1]
    if k % period != 0:
        period = k
    return Word(w.alphabet_size, letters[:period]), k // period


def is_nonperiodic(w: Word) -> bool:
    """True iff w cannot be written J_0^r with r ≥ 2"""
    return primitive_root(w)[1] == 1


# ==================== Cyclic Classes ====================
def least_rotation(letters: Sequence[int]) -> int:
    """
    Booth's algorithm: start index of the lexicographically least rotation

    Ties (periodic words) resolve to the smallest index.
    """
    n = len(letters)
    failure = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        current = letters[j % n]
        i = failure[j - k - 1]
        while i != -1 and current != letters[(k + i + 1) % n]:
            if current < letters[(k + i + 1) % n]:
                k = j - i - 1
            i = failure[i]
        if i == -1 and current != letters[(k + i + 1) % n]:
            if current < letters[(k + i + 1) % n]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k % n


def canonical(w: Word) -> Word:
    """The ≺-least rotation of w"""
    return rotate(w, least_rotation(w.letters))


def cyclically_equivalent(w1: Word, w2: Word) -> bool:
    """J_1 ∼ J_2: same length and one is a rotation of the other"""
    _check_same_alphabet(w1, w2)
    if len(w1) != len(w2):
        return False
    return canonical(w1) == canonical(w2)


def is_canonical(w: Word) -> bool:
    """True iff w is minimal in its ∼-class"""
    return canonical(w) == w


def lyndon_words(alphabet_size: int, max_len: int) -> list[Word]:
    """
    All minimal nonperiodic words [1,…,N]* of length ≤ max_len

    Generated by Duval's algorithm and returned in (length, value) order.
    """
    if max_len < 1:
        return []

    found = []
    letters = [-1]
    while letters:
        letters[-1] += 1
        found.append(Word(alphabet_size, tuple(letter + 1 for letter in letters)))
        m = len(letters)
        while len(letters) < max_len:
            letters.append(letters[-m])
        while letters and letters[-1] == alphabet_size - 1:
            letters.pop()

    found.sort(key=sort_key)
    return found
