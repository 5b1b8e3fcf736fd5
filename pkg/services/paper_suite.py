"""
Regression suite: every published branching law, recomputed and compared
up to rotation of each output word and order of the summands
"""
from dataclasses import dataclass

from services.branching import branch
from services.catalog import get_builtin
from services.words import Word, canonical, format_word, parse_word, sort_key
from utils.console import status


@dataclass(frozen=True)
class PaperCase:
    """One published row P(input)∘ψ_σ = ⊕ P(expected)"""

    section: str
    builtin: str
    word: str
    expected: tuple[str, ...]


@dataclass(frozen=True)
class PaperCaseResult:
    case: PaperCase
    expected: tuple[Word, ...]
    actual: tuple[Word, ...]

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


PAPER_CASES: tuple[PaperCase, ...] = (
    # σ_0 ∈ 𝔖_{3,2}
    PaperCase("1", "nakanishi", "1", ("3", "12")),
    PaperCase("1", "nakanishi", "12", ("113223",)),
    PaperCase("1", "nakanishi", "123", ("131313", "222")),
    PaperCase("1", "nakanishi", "132", ("232323", "111")),
    # 𝔖_{2,2}
    PaperCase("5.1", "psi12", "1", ("12",)),
    PaperCase("5.1", "psi12", "2", ("1", "2")),
    PaperCase("5.1", "psi12", "12", ("1122",)),
    PaperCase("5.1", "psi12", "1122", ("1112", "1222")),
    PaperCase("5.1", "e22-swap21", "1", ("2",)),
    PaperCase("5.1", "e22-swap21", "2", ("2",)),
    PaperCase("5.1", "e22-swap21", "12", ("11",)),
    PaperCase("5.1", "e22-swap21", "112", ("112",)),
    PaperCase("5.1", "e22-swap21", "122", ("112",)),
    PaperCase("5.1", "e22-cross", "1", ("12",)),
    PaperCase("5.1", "e22-cross", "2", ("12",)),
    PaperCase("5.1", "e22-cross", "12", ("11", "22")),
    # 𝔖_{3,2}
    PaperCase("5.2", "e32-swap", "1", ("12",)),
    PaperCase("5.2", "e32-swap", "2", ("1", "2")),
    PaperCase("5.2", "e32-swap", "3", ("3",)),
    # 𝔖_{4,2}
    PaperCase("5.3", "e42", "1", ("1", "1", "1", "1")),
    PaperCase("5.3", "e42", "2", ("2", "2", "2")),
    PaperCase("5.3", "e42", "4", ("4", "444")),
    # canonical endomorphism
    PaperCase("5.4", "canonical:2", "1", ("1", "1")),
    PaperCase("5.4", "canonical:2", "12", ("12", "12")),
    PaperCase("5.4", "canonical:3", "123", ("123", "123", "123")),
    # 𝔖_{2,3}
    PaperCase("5.5", "e23-swap", "1", ("12",)),
    PaperCase("5.5", "e23-swap", "2", ("2",)),
    PaperCase("5.5", "e23-swap", "12", ("11",)),
    PaperCase("5.5", "e23-swap", "112", ("112",)),
    # 𝔖_{2,4}
    PaperCase("5.6", "e24-swap", "1", ("12",)),
    PaperCase("5.6", "e24-swap", "2", ("2",)),
    PaperCase("5.6", "e24-swap", "12", ("12",)),
    PaperCase("5.6", "e24-swap", "112", ("111",)),
)


def _canonical_multiset(words: list[Word]) -> tuple[Word, ...]:
    return tuple(sorted((canonical(w) for w in words), key=sort_key))


def run_case(case: PaperCase) -> PaperCaseResult:
    """Recompute one row"""
    sigma = get_builtin(case.builtin)
    n = sigma.alphabet_size
    expected = _canonical_multiset([parse_word(text, n) for text in case.expected])
    law = branch(sigma, parse_word(case.word, n))
    return PaperCaseResult(case, expected, law.outputs())


def run_paper_suite(cases: tuple[PaperCase, ...] = PAPER_CASES) -> list[PaperCaseResult]:
    """Recompute every row, in table order"""
    status(f"📋 Recomputing {len(cases)} published branching laws...")
    results = [run_case(case) for case in cases]
    failed = sum(not result.passed for result in results)
    if failed:
        status(f"   ❌ {failed} row(s) differ")
    else:
        status("   ✅ All rows match")
    return results


def _multiset_text(words: tuple[Word, ...]) -> str:
    return " ".join(format_word(w) for w in words)


def suite_report(results: list[PaperCaseResult]) -> str:
    """TSV: section, σ, input, expected, actual, status"""
    lines = ["section\tsigma\tinput\texpected\tactual\tstatus"]
    for result in results:
        case = result.case
        lines.append("\t".join([
            case.section,
            case.builtin,
            case.word,
            _multiset_text(result.expected),
            _multiset_text(result.actual),
            "ok" if result.passed else "DIFF",
        ]))
    return "\n".join(lines) + "\n"
