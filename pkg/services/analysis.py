"""
Facts derived from branching laws: properness and irreducibility
certificates, distinguishing endomorphisms, the ψ_12 parity law, the diagram
component bound, and signature classification of 𝔖_{N,l}
"""
import hashlib
from dataclasses import dataclass
from typing import Iterator, Optional

from config.config import CLASSIFY_SAMPLE_WITNESSES, SIGNATURE_HASH_LENGTH
from services.branching import BranchingLaw, BranchingService, signature
from services.catalog import psi12
from services.mealy import connected_components
from services.permutation import (
    MultiIndexPermutation,
    enumerate_permutations,
    to_pairs,
)
from services.words import Word, format_word
from utils.console import status
from utils.errors import AlphabetMismatchError


class CertificateKind:
    """What a certificate exhibits"""
    IRREDUCIBLE = "irreducible-evidence"
    PROPER = "proper"
    DISTINCT = "distinct"


@dataclass(frozen=True)
class Certificate:
    """
    A witness word and the branching law(s) proving a property of ψ_σ

    DISTINCT certificates carry one law per endomorphism, in argument order.
    """

    kind: str
    witnesses: tuple[Word, ...]
    laws: tuple[BranchingLaw, ...]

    @property
    def witness(self) -> Word:
        return self.witnesses[0]


def _laws(sigma: MultiIndexPermutation, max_len: int) -> Iterator[BranchingLaw]:
    """Guarded sweep over canonical nonperiodic J up to max_len"""
    return BranchingService(sigma).laws(max_len)


# ==================== Certificates ====================
def properness_certificate(sigma: MultiIndexPermutation, max_len: int) -> Optional[Certificate]:
    """
    First J with M ≥ 2 or a periodic output

    Either makes P(J)∘ψ_σ reducible while P(J) is irreducible, so ψ_σ is proper.
    """
    for law in _laws(sigma, max_len):
        if law.size >= 2 or any(component.reducible for component in law.components):
            return Certificate(CertificateKind.PROPER, (law.input,), (law,))
    return None


def irreducibility_evidence(sigma: MultiIndexPermutation, max_len: int) -> Optional[Certificate]:
    """
    First J whose branching is a single nonperiodic output

    A returned certificate proves ψ_σ irreducible; None proves nothing.
    """
    for law in _laws(sigma, max_len):
        if law.irreducible:
            return Certificate(CertificateKind.IRREDUCIBLE, (law.input,), (law,))
    return None


def distinguish(
    s1: MultiIndexPermutation,
    s2: MultiIndexPermutation,
    max_len: int
) -> Optional[Certificate]:
    """
    First J where the canonical component multisets of ψ_σ1 and ψ_σ2 differ

    None means the signatures agree up to max_len, which is inconclusive.

    Raises:
        AlphabetMismatchError: σ1 and σ2 over different N
    """
    if s1.alphabet_size != s2.alphabet_size:
        raise AlphabetMismatchError(
            f"Cannot compare endomorphisms of O_{s1.alphabet_size} and O_{s2.alphabet_size}"
        )
    for law1, law2 in zip(_laws(s1, max_len), _laws(s2, max_len)):
        if law1.outputs() != law2.outputs():
            return Certificate(CertificateKind.DISTINCT, (law1.input,), (law1, law2))
    return None


# ==================== ψ_12 Parity ====================
def ones_count(word: Word) -> int:
    """n_1(J) = Σ (2 − j_l) over a binary word, i.e. the number of 1s"""
    if word.alphabet_size != 2:
        raise AlphabetMismatchError(f"n_1 is defined for binary words, got N={word.alphabet_size}")
    return sum(2 - letter for letter in word)


def parity_counterexamples(max_len: int) -> list[tuple[Word, int, int]]:
    """
    Binary J where ψ_12 does not give M = 2 for even n_1(J), M = 1 for odd

    Returns:
        (J, expected M, actual M) for every failure
    """
    failures = []
    for law in _laws(psi12(), max_len):
        expected = 2 if ones_count(law.input) % 2 == 0 else 1
        if law.size != expected:
            failures.append((law.input, expected, law.size))
    return failures


def parity_check_psi12(max_len: int) -> bool:
    """True iff the parity law holds for every canonical nonperiodic binary J up to max_len"""
    return not parity_counterexamples(max_len)


# ==================== Component Bound ====================
def component_bound_violations(sigma: MultiIndexPermutation, max_len: int) -> list[BranchingLaw]:
    """Laws with fewer summands than the Mealy diagram has weakly connected components"""
    service = BranchingService(sigma)
    bound = connected_components(service.machine)
    return [law for law in service.laws(max_len) if law.size < bound]


def component_bound_check(sigma: MultiIndexPermutation, max_len: int) -> bool:
    """M ≥ #components of the diagram for every tested J"""
    return not component_bound_violations(sigma, max_len)


# ==================== Classification ====================
@dataclass(frozen=True)
class SignatureCell:
    """σ's sharing one signature; they may or may not be equivalent"""

    signature_hash: str
    members: tuple[MultiIndexPermutation, ...]
    witnesses: tuple[Word, ...]  # where ψ_σ does not branch P(J) to P(J)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> MultiIndexPermutation:
        return self.members[0]


@dataclass(frozen=True)
class Classification:
    """Partition of the enumerated σ's by signature up to max_len"""

    alphabet_size: int
    block_length: int
    max_len: int
    cells: tuple[SignatureCell, ...]

    @property
    def total(self) -> int:
        return sum(cell.size for cell in self.cells)

    def report(self) -> str:
        """TSV: signature hash, cell size, representative σ, sample witnesses"""
        lines = ["signature\tsize\trepresentative\twitnesses"]
        for cell in self.cells:
            pairs = ",".join(f"{format_word(a)}->{format_word(b)}" for a, b in to_pairs(cell.representative))
            witnesses = " ".join(format_word(w) for w in cell.witnesses) or "-"
            lines.append(f"{cell.signature_hash}\t{cell.size}\t{pairs}\t{witnesses}")
        return "\n".join(lines) + "\n"


def signature_hash(sig: dict[Word, tuple[Word, ...]]) -> str:
    """Stable short hash of a signature map"""
    text = ";".join(
        f"{format_word(word)}:{' '.join(format_word(w) for w in outputs)}"
        for word, outputs in sig.items()
    )
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:SIGNATURE_HASH_LENGTH]


def classify(
    alphabet_size: int,
    block_length: int,
    max_len: int,
    cap: Optional[int] = None,
    allow_large: bool = False
) -> Classification:
    """
    Group 𝔖_{N,l} by signature(σ, max_len)

    Cells are listed in order of their first member in enumeration order.
    σ's in different cells give inequivalent endomorphisms.

    Raises:
        GuardExceededError: N^l or N^max_len over their guards
    """
    status(f"🔍 Classifying 𝔖_{{{alphabet_size},{block_length}}} by signatures up to length {max_len}...")

    groups: dict[str, list[MultiIndexPermutation]] = {}
    witnesses: dict[str, tuple[Word, ...]] = {}
    for sigma in enumerate_permutations(alphabet_size, block_length, cap=cap, allow_large=allow_large):
        sig = signature(sigma, max_len)
        key = signature_hash(sig)
        if key not in groups:
            groups[key] = []
            witnesses[key] = tuple(
                word for word, outputs in sig.items() if outputs != (word,)
            )[:CLASSIFY_SAMPLE_WITNESSES]
        groups[key].append(sigma)

    cells = tuple(
        SignatureCell(key, tuple(members), witnesses[key]) for key, members in groups.items()
    )
    result = Classification(alphabet_size, block_length, max_len, cells)
    status(f"   ✅ {result.total} permutations in {len(cells)} signature cells")
    return result
