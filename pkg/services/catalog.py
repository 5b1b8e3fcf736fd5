"""
Named permutations from the literature, usable as --builtin NAME

Parameterized families: canonical:N (the canonical endomorphism of O_N) and
identity:N:l.
"""
from typing import Callable

from services.permutation import (
    MultiIndexPermutation,
    canonical_shift,
    compose,
    from_pairs,
    identity,
    transposition,
)
from services.words import Word, parse_word
from utils.errors import SigmaParseError


def _word(text: str, alphabet_size: int) -> Word:
    return parse_word(text, alphabet_size)


def _table(alphabet_size: int, block_length: int, entries: dict[str, str]) -> MultiIndexPermutation:
    pairs = [(_word(a, alphabet_size), _word(b, alphabet_size)) for a, b in entries.items()]
    return from_pairs(alphabet_size, block_length, pairs)


def _swap(alphabet_size: int, block_length: int, first: str, second: str) -> MultiIndexPermutation:
    return transposition(
        alphabet_size, block_length, _word(first, alphabet_size), _word(second, alphabet_size)
    )


# ==================== Named Permutations ====================
def nakanishi() -> MultiIndexPermutation:
    """σ_0 ∈ 𝔖_{3,2}, whose ψ_σ is irreducible but not an automorphism"""
    return _table(3, 2, {
        "11": "23", "12": "31", "13": "12",
        "21": "32", "22": "13", "23": "21",
        "31": "11", "32": "22", "33": "33",
    })


def psi12() -> MultiIndexPermutation:
    """The transposition 11 ↔ 12 in 𝔖_{2,2}"""
    return _swap(2, 2, "11", "12")


def e22_swap21() -> MultiIndexPermutation:
    """11 ↔ 21 in 𝔖_{2,2}"""
    return _swap(2, 2, "11", "21")


def e22_cross() -> MultiIndexPermutation:
    """11 → 22 → 12 → 11, 21 fixed"""
    return _table(2, 2, {"11": "22", "12": "11", "21": "21", "22": "12"})


def e32_swap() -> MultiIndexPermutation:
    """11 ↔ 12 in 𝔖_{3,2}"""
    return _swap(3, 2, "11", "12")


def e42() -> MultiIndexPermutation:
    """An element of 𝔖_{4,2} whose diagram has an isolated state q_2"""
    return _table(4, 2, {
        "11": "11", "12": "21", "13": "31", "14": "41",
        "21": "12", "22": "22", "23": "43", "24": "42",
        "31": "32", "32": "23", "33": "13", "34": "33",
        "41": "44", "42": "24", "43": "14", "44": "34",
    })


def e23_swap() -> MultiIndexPermutation:
    """111 ↔ 121 in 𝔖_{2,3}"""
    return _swap(2, 3, "111", "121")


def e23_composite() -> MultiIndexPermutation:
    """(111 ↔ 121)∘(112 ↔ 122), with the same branching laws as ψ_12"""
    return compose(e23_swap(), _swap(2, 3, "112", "122"))


def e24_swap() -> MultiIndexPermutation:
    """1111 ↔ 1211 in 𝔖_{2,4}"""
    return _swap(2, 4, "1111", "1211")


BUILTINS: dict[str, Callable[[], MultiIndexPermutation]] = {
    "nakanishi": nakanishi,
    "psi12": psi12,
    "e22-swap21": e22_swap21,
    "e22-cross": e22_cross,
    "e32-swap": e32_swap,
    "e42": e42,
    "e23-swap": e23_swap,
    "e23-composite": e23_composite,
    "e24-swap": e24_swap,
}

PARAMETERIZED = ("canonical:N", "identity:N:l")


def builtin_names() -> list[str]:
    """Every accepted --builtin name, families in pattern form"""
    return list(BUILTINS) + list(PARAMETERIZED)


def _int_argument(name: str, text: str) -> int:
    if not text.isdigit():
        raise SigmaParseError(f"Expected an integer parameter, got {text!r}", source=name)
    return int(text)


def get_builtin(name: str) -> MultiIndexPermutation:
    """
    Resolve a builtin name

    Raises:
        SigmaParseError: unknown name or malformed parameters
    """
    if name in BUILTINS:
        return BUILTINS[name]()

    family, *params = name.split(":")
    try:
        if family == "canonical" and len(params) == 1:
            return canonical_shift(_int_argument(name, params[0]))
        if family == "identity" and len(params) == 2:
            return identity(_int_argument(name, params[0]), _int_argument(name, params[1]))
    except ValueError as e:
        if isinstance(e, SigmaParseError):
            raise
        raise SigmaParseError(str(e), source=name) from e

    raise SigmaParseError(
        f"Unknown builtin; choose one of {', '.join(builtin_names())}", source=name
    )
