"""
Brute-force branching laws from branching function systems.

P(J) is realized symbolically: a point (W, t) stands for f_W(n_t), where
n_0,…,n_{k−1} is the base cycle with f_{j_t}(n_t) = n_{t−1 mod k}
(0-based t, j_t = J[t]). Rewriting (W·j_t, t) → (W, t−1) to exhaustion gives
unique normal forms, so Λ is never materialized. f^(σ) is then applied
literally, f^(σ)_i(f_K(n)) = f_{σ(i,K)}(n) with |K| = l−1, and its cycles are
found by walking the inverse coding map. No Mealy machine is involved.
"""
import itertools
import random
from dataclasses import dataclass

from config.config import FUZZ_ALPHABET_SIZES, FUZZ_BLOCK_LENGTHS, FUZZ_MAX_WORD_LENGTH
from services.branching import branch
from services.permutation import MultiIndexPermutation, apply, inverse
from services.words import Word, canonical, is_nonperiodic, sort_key
from utils.console import status
from utils.errors import AlphabetMismatchError, PeriodicWordError


@dataclass(frozen=True)
class SymbolicPoint:
    """Normal form (W, t): W is empty or its last letter differs from J[t]"""

    prefix: tuple[int, ...]
    position: int


@dataclass(frozen=True)
class Cycle:
    """A cycle of f^(σ) and the word T with f^(σ)_T fixing points[0]"""

    points: tuple[SymbolicPoint, ...]
    output: Word


@dataclass(frozen=True)
class OracleComparison:
    """Canonical component multisets from both computations"""

    word: Word
    machine_outputs: tuple[Word, ...]
    oracle_outputs: tuple[Word, ...]

    @property
    def agrees(self) -> bool:
        return self.machine_outputs == self.oracle_outputs


class SymbolicBFS:
    """The branching function system f on Λ realizing P(J)"""

    def __init__(self, cycle_word: Word):
        """
        Initialize the system

        Args:
            cycle_word: J (nonperiodic)

        Raises:
            PeriodicWordError: J is periodic
        """
        if not is_nonperiodic(cycle_word):
            raise PeriodicWordError(f"The oracle needs a nonperiodic word, got {cycle_word}")
        self.alphabet_size = cycle_word.alphabet_size
        self.cycle_word = cycle_word
        self.letters = cycle_word.letters
        self.period = len(cycle_word)

    def base_point(self, position: int) -> SymbolicPoint:
        """n_t"""
        return SymbolicPoint((), position % self.period)

    def normalize(self, prefix: tuple[int, ...], position: int) -> SymbolicPoint:
        """Strip trailing cycle letters: (W·j_t, t) → (W, t−1 mod k)"""
        end = len(prefix)
        t = position % self.period
        while end and prefix[end - 1] == self.letters[t]:
            end -= 1
            t = (t - 1) % self.period
        return SymbolicPoint(prefix[:end], t)

    def apply_f(self, letter: int, point: SymbolicPoint) -> SymbolicPoint:
        """f_i(x)"""
        return self.normalize((letter,) + point.prefix, point.position)

    def apply_word(self, word: tuple[int, ...], point: SymbolicPoint) -> SymbolicPoint:
        """f_W(x) = f_{w_1}∘⋯∘f_{w_m}(x)"""
        return self.normalize(word + point.prefix, point.position)

    def expand(self, point: SymbolicPoint, min_length: int) -> tuple[tuple[int, ...], int]:
        """
        Another representation (W', t') of the same point with |W'| ≥ min_length

        Unfolds the cycle: (W, t) = (W·j_{t+1}, t+1). normalize() undoes it.
        """
        prefix = list(point.prefix)
        t = point.position
        while len(prefix) < min_length:
            t = (t + 1) % self.period
            prefix.append(self.letters[t])
        return tuple(prefix), t

    def apply_f_sigma(self, sigma: MultiIndexPermutation, letter: int, point: SymbolicPoint) -> SymbolicPoint:
        """f^(σ)_i(f_K(n)) = f_{σ(i,K)}(n), |K| = l−1 (f^(σ)_i = f_{σ(i)} for l = 1)"""
        self._check_sigma(sigma)
        tail_length = sigma.block_length - 1
        prefix, t = self.expand(point, tail_length)
        block = Word(self.alphabet_size, (letter,) + prefix[:tail_length])
        image = apply(sigma, block)
        return self.normalize(image.letters + prefix[tail_length:], t)

    def parent(
        self,
        sigma: MultiIndexPermutation,
        point: SymbolicPoint,
        sigma_inv: MultiIndexPermutation | None = None
    ) -> tuple[int, SymbolicPoint]:
        """
        The unique (i, y) with f^(σ)_i(y) = x

        Exists and is unique because the images of f^(σ)_1,…,f^(σ)_N
        partition Λ.
        """
        self._check_sigma(sigma)
        if sigma_inv is None:
            sigma_inv = inverse(sigma)
        l = sigma.block_length
        prefix, t = self.expand(point, l)
        source = apply(sigma_inv, Word(self.alphabet_size, prefix[:l]))
        return source.letters[0], self.normalize(source.letters[1:] + prefix[l:], t)

    def candidates(self, block_length: int) -> list[SymbolicPoint]:
        """
        Start points for the cycle search: f_I(f_{j_t}(n_t)) for |I| = l−1,
        plus the base cycle. At most N^{l−1}·k + k points.
        """
        found = {}
        for t in range(self.period):
            found.setdefault(self.base_point(t), None)
            for tail in itertools.product(range(1, self.alphabet_size + 1), repeat=block_length - 1):
                found.setdefault(self.normalize(tail + (self.letters[t],), t), None)
        return list(found)

    def _check_sigma(self, sigma: MultiIndexPermutation) -> None:
        if sigma.alphabet_size != self.alphabet_size:
            raise AlphabetMismatchError(
                f"σ over N={sigma.alphabet_size} applied to P(J) over N={self.alphabet_size}"
            )

    def find_cycles(self, sigma: MultiIndexPermutation) -> list[Cycle]:
        """
        Every cycle of f^(σ), each exactly once

        Iterates the parent map from each candidate; prefixes shrink until
        they stay below length l, so every walk ends on a cycle.
        """
        self._check_sigma(sigma)
        sigma_inv = inverse(sigma)
        done: set[SymbolicPoint] = set()
        cycles = []

        for start in self.candidates(sigma.block_length):
            if start in done:
                continue
            walk: list[SymbolicPoint] = []
            letters: list[int] = []
            on_walk: dict[SymbolicPoint, int] = {}
            point = start
            while point not in done and point not in on_walk:
                on_walk[point] = len(walk)
                walk.append(point)
                letter, point = self.parent(sigma, point, sigma_inv)
                letters.append(letter)
            if point in on_walk:
                begin = on_walk[point]
                cycles.append(Cycle(
                    points=tuple(walk[begin:]),
                    output=Word(self.alphabet_size, tuple(letters[begin:])),
                ))
            done.update(walk)

        return cycles


# ==================== Module API ====================
def find_cycles(sigma: MultiIndexPermutation, word: Word) -> list[Cycle]:
    """
    Cycles of f^(σ) for f realizing P(J)

    Raises:
        PeriodicWordError: J is periodic
        AlphabetMismatchError: σ and J over different alphabets
    """
    return SymbolicBFS(word).find_cycles(sigma)


def oracle_outputs(sigma: MultiIndexPermutation, word: Word) -> tuple[Word, ...]:
    """Canonical cycle words in (length, value) order"""
    return tuple(sorted((canonical(cycle.output) for cycle in find_cycles(sigma, word)), key=sort_key))


def cross_check(sigma: MultiIndexPermutation, word: Word) -> OracleComparison:
    """Run both the machine algorithm and the oracle on (σ, J)"""
    brute = oracle_outputs(sigma, word)
    law = branch(sigma, word)
    return OracleComparison(word, law.outputs(), brute)


def compare(sigma: MultiIndexPermutation, word: Word) -> bool:
    """True iff the oracle and the machine give the same canonical multiset"""
    return cross_check(sigma, word).agrees


# ==================== Fuzzing ====================
def random_permutation(rng: random.Random, alphabet_size: int, block_length: int) -> MultiIndexPermutation:
    size = alphabet_size ** block_length
    return MultiIndexPermutation(alphabet_size, block_length, tuple(rng.sample(range(size), size)))


def random_nonperiodic_word(rng: random.Random, alphabet_size: int, max_len: int) -> Word:
    """Uniform length in 1..max_len, uniform letters, periodic draws rejected"""
    while True:
        length = rng.randint(1, max_len)
        word = Word(alphabet_size, tuple(rng.randint(1, alphabet_size) for _ in range(length)))
        if is_nonperiodic(word):
            return word


def random_instances(
    count: int,
    seed: int,
    sigma: MultiIndexPermutation | None = None
) -> list[tuple[MultiIndexPermutation, Word]]:
    """
    Deterministic (σ, J) draws over the fuzz domain

    With sigma given only the words are drawn.
    """
    rng = random.Random(seed)
    instances = []
    for _ in range(count):
        if sigma is None:
            n = rng.choice(FUZZ_ALPHABET_SIZES)
            candidate = random_permutation(rng, n, rng.choice(FUZZ_BLOCK_LENGTHS))
        else:
            candidate = sigma
        instances.append((candidate, random_nonperiodic_word(rng, candidate.alphabet_size, FUZZ_MAX_WORD_LENGTH)))
    return instances


def fuzz(
    count: int,
    seed: int,
    sigma: MultiIndexPermutation | None = None
) -> list[tuple[MultiIndexPermutation, OracleComparison]]:
    """Cross-check random instances; returns the disagreements"""
    status(f"🎲 Cross-checking {count} random instances (seed {seed})...")
    failures = []
    for candidate, word in random_instances(count, seed, sigma):
        comparison = cross_check(candidate, word)
        if not comparison.agrees:
            failures.append((candidate, comparison))
    if failures:
        status(f"   ❌ {len(failures)} disagreement(s)")
    else:
        status("   ✅ Oracle agrees on every instance")
    return failures
