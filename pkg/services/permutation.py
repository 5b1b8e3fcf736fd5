"""
Permutations σ of {1,…,N}^l (the set 𝔖_{N,l}) stored as rank-indexed tables
"""
import hashlib
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from config.config import ENUMERATE_GUARD
from services.words import Word, format_word, value
from utils.errors import AlphabetMismatchError, GuardExceededError, PermutationError


@dataclass(frozen=True)
class MultiIndexPermutation:
    """
    A bijection σ on {1,…,N}^l

    table[rank(J)] == rank(σ(J)), with the big-endian rank of words module.
    """

    alphabet_size: int
    block_length: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise PermutationError(f"Alphabet size must be at least 2, got {self.alphabet_size}")
        if self.block_length < 1:
            raise PermutationError(f"Block length must be at least 1, got {self.block_length}")
        size = self.alphabet_size ** self.block_length
        if len(self.table) != size:
            raise PermutationError(f"Table has {len(self.table)} entries, expected N^l = {size}")
        if sorted(self.table) != list(range(size)):
            raise PermutationError("Table is not a permutation of the ranks 0..N^l-1")

    @property
    def size(self) -> int:
        """N^l"""
        return len(self.table)

    def __call__(self, word: Word) -> Word:
        return apply(self, word)


# ==================== Rank / Unrank ====================
def rank(word: Word) -> int:
    """Big-endian base-N rank Σ (j_m − 1)·N^{l−m}"""
    return value(word)


def unrank(alphabet_size: int, length: int, r: int) -> Word:
    """Inverse of rank over words of the given length"""
    if not 0 <= r < alphabet_size ** length:
        raise PermutationError(f"Rank {r} outside 0..{alphabet_size ** length - 1}")
    letters = [0] * length
    for position in range(length - 1, -1, -1):
        r, digit = divmod(r, alphabet_size)
        letters[position] = digit + 1
    return Word(alphabet_size, tuple(letters))


def _check_block(sigma: MultiIndexPermutation, word: Word) -> None:
    if word.alphabet_size != sigma.alphabet_size:
        raise AlphabetMismatchError(
            f"Word over N={word.alphabet_size} applied to σ over N={sigma.alphabet_size}"
        )
    if len(word) != sigma.block_length:
        raise PermutationError(f"σ acts on words of length {sigma.block_length}, got {len(word)}")


def _check_shape(s1: MultiIndexPermutation, s2: MultiIndexPermutation) -> None:
    if (s1.alphabet_size, s1.block_length) != (s2.alphabet_size, s2.block_length):
        raise PermutationError(
            f"Shapes differ: 𝔖_{{{s1.alphabet_size},{s1.block_length}}} vs "
            f"𝔖_{{{s2.alphabet_size},{s2.block_length}}}"
        )


# ==================== Operations ====================
def apply(sigma: MultiIndexPermutation, word: Word) -> Word:
    """σ(J)"""
    _check_block(sigma, word)
    return unrank(sigma.alphabet_size, sigma.block_length, sigma.table[rank(word)])


def inverse(sigma: MultiIndexPermutation) -> MultiIndexPermutation:
    """σ^{-1}"""
    table = [0] * sigma.size
    for source, target in enumerate(sigma.table):
        table[target] = source
    return MultiIndexPermutation(sigma.alphabet_size, sigma.block_length, tuple(table))


def components(sigma: MultiIndexPermutation, word: Word, start: int, stop: int) -> Word:
    """
    σ_{n,m}(J) = (σ_n(J),…,σ_m(J)), 1-based inclusive bounds

    Raises:
        PermutationError: bounds outside 1 ≤ start ≤ stop ≤ l
    """
    if not 1 <= start <= stop <= sigma.block_length:
        raise PermutationError(f"Component range {start}..{stop} outside 1..{sigma.block_length}")
    image = apply(sigma, word)
    return Word(sigma.alphabet_size, image.letters[start - 1:stop])


def compose(s1: MultiIndexPermutation, s2: MultiIndexPermutation) -> MultiIndexPermutation:
    """σ1∘σ2, i.e. J ↦ σ1(σ2(J))"""
    _check_shape(s1, s2)
    table = tuple(s1.table[s2.table[r]] for r in range(s1.size))
    return MultiIndexPermutation(s1.alphabet_size, s1.block_length, table)


def from_pairs(
    alphabet_size: int,
    block_length: int,
    pairs: Iterable[tuple[Word, Word]]
) -> MultiIndexPermutation:
    """
    Build σ from (J, σ(J)) pairs covering every input exactly once

    Raises:
        PermutationError: wrong lengths, missing or duplicate inputs, or a
            non-bijective image
    """
    size = alphabet_size ** block_length
    table: list[Optional[int]] = [None] * size

    for source, target in pairs:
        for word in (source, target):
            if word.alphabet_size != alphabet_size or len(word) != block_length:
                raise PermutationError(
                    f"Pair entry {format_word(word)} is not a word of length {block_length} over N={alphabet_size}"
                )
        r = rank(source)
        if table[r] is not None:
            raise PermutationError(f"Duplicate input {format_word(source)}")
        table[r] = rank(target)

    missing = [unrank(alphabet_size, block_length, r) for r, t in enumerate(table) if t is None]
    if missing:
        raise PermutationError(f"Missing inputs: {', '.join(format_word(w) for w in missing[:5])}")

    images = [t for t in table if t is not None]
    if len(set(images)) != size:
        raise PermutationError("Images do not form a permutation (repeated image)")

    return MultiIndexPermutation(alphabet_size, block_length, tuple(images))


def to_pairs(sigma: MultiIndexPermutation) -> list[tuple[Word, Word]]:
    """All (J, σ(J)) in rank order of J"""
    n, l = sigma.alphabet_size, sigma.block_length
    return [(unrank(n, l, r), unrank(n, l, t)) for r, t in enumerate(sigma.table)]


# ==================== Builders ====================
def identity(alphabet_size: int, block_length: int) -> MultiIndexPermutation:
    """The identity of 𝔖_{N,l}"""
    return MultiIndexPermutation(
        alphabet_size, block_length, tuple(range(alphabet_size ** block_length))
    )


def canonical_shift(alphabet_size: int) -> MultiIndexPermutation:
    """σ(i,j) = (j,i); ψ_σ is the canonical endomorphism"""
    n = alphabet_size
    table = tuple((r % n) * n + r // n for r in range(n * n))
    return MultiIndexPermutation(n, 2, table)


def transposition(alphabet_size: int, block_length: int, first: Word, second: Word) -> MultiIndexPermutation:
    """
    The transposition exchanging two multi-indices

    Raises:
        PermutationError: first == second
    """
    if first == second:
        raise PermutationError(f"A transposition needs two distinct words, got {format_word(first)} twice")
    for word in (first, second):
        if len(word) != block_length or word.alphabet_size != alphabet_size:
            raise PermutationError(f"Transposed words must have length {block_length} over N={alphabet_size}")
    table = list(range(alphabet_size ** block_length))
    a, b = rank(first), rank(second)
    table[a], table[b] = table[b], table[a]
    return MultiIndexPermutation(alphabet_size, block_length, tuple(table))


# ==================== Enumeration ====================
def count_permutations(alphabet_size: int, block_length: int) -> int:
    """#E_{N,l} upper bound (N^l)!"""
    return math.factorial(alphabet_size ** block_length)


def enumerate_permutations(
    alphabet_size: int,
    block_length: int,
    cap: Optional[int] = None,
    allow_large: bool = False
) -> Iterator[MultiIndexPermutation]:
    """
    Lazily yield 𝔖_{N,l} in lexicographic order of tables (identity first)

    Args:
        alphabet_size: N
        block_length: l
        cap: stop after this many permutations (None = all)
        allow_large: bypass the N^l guard

    Raises:
        GuardExceededError: N^l above ENUMERATE_GUARD without allow_large
    """
    size = alphabet_size ** block_length
    if size > ENUMERATE_GUARD and not allow_large:
        raise GuardExceededError(
            f"Enumerating 𝔖_{{{alphabet_size},{block_length}}} means ({size})! tables; "
            f"limit is N^l ≤ {ENUMERATE_GUARD}"
        )
    tables = itertools.permutations(range(size))
    if cap is not None:
        tables = itertools.islice(tables, cap)
    for table in tables:
        yield MultiIndexPermutation(alphabet_size, block_length, tuple(table))


# ==================== Identity & Queries ====================
def fingerprint(sigma: MultiIndexPermutation) -> str:
    """Stable short hash of (N, l, table)"""
    payload = f"{sigma.alphabet_size}:{sigma.block_length}:{','.join(map(str, sigma.table))}"
    return hashlib.sha1(payload.encode("utf-8")).hexdigest()[:12]


def is_automorphism(sigma: MultiIndexPermutation) -> bool:
    """l = 1: ψ_σ(s_i) = s_{σ(i)} is an automorphism"""
    return sigma.block_length == 1
