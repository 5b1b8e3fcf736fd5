"""
Branching laws P(J)∘ψ_σ = P(J_1)⊕⋯⊕P(J_M) computed from the semi-Mealy
machine, the presentation of ψ_σ on generators, and signatures
"""
from dataclasses import dataclass, field
from typing import Iterator

from config.config import SIGNATURE_WORD_CAP
from services.mealy import (
    SemiMealyMachine,
    build,
    periodic_states,
    run,
    state_name,
    trace,
)
from services.permutation import MultiIndexPermutation, apply, fingerprint, unrank
from services.words import (
    Word,
    canonical,
    concat,
    format_word,
    is_nonperiodic,
    lyndon_words,
    power,
    primitive_root,
    sort_key,
)
from utils.errors import AlphabetMismatchError, GuardExceededError


@dataclass(frozen=True)
class Component:
    """One summand P(J_i)"""

    output: Word  # canonical J_i
    representative: int  # p_i
    orbit_size: int  # r_i
    raw_output: Word  # λ(p_i, (a_J)^{r_i}) before canonicalization
    states: tuple[int, ...] = field(default=())  # state before each input letter

    @property
    def reducible(self) -> bool:
        """P(J_i) is irreducible iff J_i is nonperiodic"""
        return not is_nonperiodic(self.output)


@dataclass(frozen=True)
class BranchingLaw:
    """The right side of P(J)∘ψ_σ together with orbit metadata"""

    sigma_id: str
    query: Word  # the word as requested
    input: Word  # canonical nonperiodic J actually branched
    components: tuple[Component, ...]
    gauge_reduced: bool = False
    gauge_period: int = 1

    @property
    def size(self) -> int:
        """M"""
        return len(self.components)

    def outputs(self) -> tuple[Word, ...]:
        """Canonical component multiset in (length, value) order"""
        return tuple(component.output for component in self.components)

    @property
    def irreducible(self) -> bool:
        """A single nonperiodic summand"""
        return self.size == 1 and not self.components[0].reducible


# ==================== Main Algorithm ====================
def branch_with_machine(machine: SemiMealyMachine, sigma_id: str, word: Word) -> BranchingLaw:
    """
    Branch P(J) through an already built machine

    Raises:
        AlphabetMismatchError: J is not a word over the machine's alphabet
    """
    if word.alphabet_size != machine.alphabet_size:
        raise AlphabetMismatchError(
            f"Word over N={word.alphabet_size} but σ is over N={machine.alphabet_size}"
        )

    root, period = primitive_root(word)
    base = canonical(root)

    components = []
    for orbit in periodic_states(machine, base).orbits:
        extended = power(base, orbit.size)
        _, raw = run(machine, orbit.representative, extended)
        components.append(Component(
            output=canonical(raw),
            representative=orbit.representative,
            orbit_size=orbit.size,
            raw_output=raw,
            states=tuple(trace(machine, orbit.representative, extended)),
        ))
    components.sort(key=lambda component: (sort_key(component.output), component.representative))

    return BranchingLaw(
        sigma_id=sigma_id,
        query=word,
        input=base,
        components=tuple(components),
        gauge_reduced=period > 1,
        gauge_period=period,
    )


def branch(sigma: MultiIndexPermutation, word: Word) -> BranchingLaw:
    """
    b_{J_i} = λ(p_i, (a_J)^{r_i}) over the orbit decomposition of Q_J

    A periodic J = J_0^r is reduced to J_0 and flagged gauge_reduced.
    """
    return BranchingService(sigma).branch(word)


# ==================== Rendering ====================
def render_law(law: BranchingLaw, unicode: bool = False) -> str:
    """
    P(<J>) o psi = P(<J_1>) (+) P(<J_2>) … (∘ / ⊕ glyphs in unicode mode)

    J is written as requested; a periodic request is cut to its primitive root.
    """
    left = format_word(primitive_root(law.query)[0])
    summands = [f"P({format_word(output)})" for output in law.outputs()]
    if unicode:
        return f"P({left})∘ψ = " + "⊕".join(summands)
    return f"P({left}) o psi = " + " (+) ".join(summands)


def endomorphism_formula(sigma: MultiIndexPermutation, unicode: bool = False) -> list[str]:
    """
    ψ_σ(s_i) = Σ_K s_{σ(i,K)} s_K^*, one line per generator

    A generator whose terms are all s_{(i,K)} s_K^* is written s_i.
    """
    n, l = sigma.alphabet_size, sigma.block_length
    name = "ψ" if unicode else "psi"
    star = "^*" if unicode else "*"
    lines = []

    for i in range(1, n + 1):
        head = Word(n, (i,))
        if l == 1:
            image = apply(sigma, head)
            lines.append(f"{name}(s_{i}) = s_{format_word(image)}")
            continue

        terms = []
        fixed = True
        for r in range(n ** (l - 1)):
            tail = unrank(n, l - 1, r)
            source = concat(head, tail)
            image = apply(sigma, source)
            fixed = fixed and image == source
            terms.append(f"s_{format_word(image)} s_{format_word(tail)}{star}")

        if fixed:
            lines.append(f"{name}(s_{i}) = s_{i}")
        else:
            lines.append(f"{name}(s_{i}) = " + " + ".join(terms))

    return lines


def _state_trace(machine: SemiMealyMachine, component: Component) -> str:
    return " ".join(state_name(machine, state) for state in component.states)


def check_sweep_size(alphabet_size: int, max_len: int) -> None:
    """
    Refuse sweeps over [1,…,N]* up to max_len that would be too large

    Raises:
        ValueError: max_len < 1
        GuardExceededError: N^max_len above SIGNATURE_WORD_CAP
    """
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    if alphabet_size ** max_len > SIGNATURE_WORD_CAP:
        raise GuardExceededError(
            f"Sweep up to length {max_len} over N={alphabet_size} exceeds "
            f"the cap of {SIGNATURE_WORD_CAP} words"
        )


# ==================== Service ====================
class BranchingService:
    """Branching laws of one σ; the machine and fingerprint are built once"""

    def __init__(self, sigma: MultiIndexPermutation):
        """
        Initialize branching service

        Args:
            sigma: The permutation defining ψ_σ
        """
        self.sigma = sigma
        self.machine = build(sigma)
        self.sigma_id = fingerprint(sigma)

    def branch(self, word: Word) -> BranchingLaw:
        return branch_with_machine(self.machine, self.sigma_id, word)

    def laws(self, max_len: int) -> Iterator[BranchingLaw]:
        """
        Laws of every canonical nonperiodic J up to max_len, in (length, value) order

        Raises:
            GuardExceededError: N^max_len above SIGNATURE_WORD_CAP, before any work
            ValueError: max_len < 1
        """
        check_sweep_size(self.sigma.alphabet_size, max_len)
        return (self.branch(word) for word in lyndon_words(self.sigma.alphabet_size, max_len))

    def signature(self, max_len: int) -> dict[Word, tuple[Word, ...]]:
        return {law.query: law.outputs() for law in self.laws(max_len)}

    def table(self, words: list[Word], fmt: str = "tsv", unicode: bool = False) -> str:
        """
        Table with columns input | cycles | outputs | branching law

        "cycles" lists, per summand, the state before each input letter;
        "outputs" the raw machine outputs; the law uses canonical words.
        """
        header = ["input", "cycles", "outputs", "branching law"]
        rows = []

        for word in words:
            law = self.branch(word)
            rows.append([
                format_word(law.query),
                ", ".join(_state_trace(self.machine, c) for c in law.components),
                ", ".join(format_word(c.raw_output) for c in law.components),
                render_law(law, unicode),
            ])

        if fmt == "markdown":
            lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
            lines += ["| " + " | ".join(row) + " |" for row in rows]
        else:
            lines = ["\t".join(header)] + ["\t".join(row) for row in rows]
        return "\n".join(lines) + "\n"


def branch_table(
    sigma: MultiIndexPermutation,
    words: list[Word],
    fmt: str = "tsv",
    unicode: bool = False
) -> str:
    return BranchingService(sigma).table(words, fmt, unicode)


# ==================== Signatures ====================
def signature(sigma: MultiIndexPermutation, max_len: int) -> dict[Word, tuple[Word, ...]]:
    """
    Branching outputs for every J ∈ [1,…,N]* with |J| ≤ max_len

    Raises:
        GuardExceededError: N^max_len above SIGNATURE_WORD_CAP
        ValueError: max_len < 1
    """
    return BranchingService(sigma).signature(max_len)


def signature_table(sigma: MultiIndexPermutation, max_len: int) -> str:
    """TSV: word, canonical components"""
    lines = ["word\tcomponents"]
    for word, outputs in signature(sigma, max_len).items():
        lines.append(f"{format_word(word)}\t{' '.join(format_word(w) for w in outputs)}")
    return "\n".join(lines) + "\n"
