"""
Sigma Repository - Reads and writes permutation files
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from config.config import DIGIT_TEXT_MAX_ALPHABET, MAX_ALPHABET_SIZE
from services.catalog import get_builtin
from services.permutation import MultiIndexPermutation, from_pairs, to_pairs
from services.words import Word, format_word, parse_word
from utils.console import status
from utils.errors import CuntzError, SigmaParseError

FORMATS = ("auto", "json", "compact")


@dataclass(frozen=True)
class SigmaSpec:
    """A loaded σ and where it came from"""

    source: str
    format: str  # json | compact | builtin
    parsed: MultiIndexPermutation


class SigmaRepository:
    """
    Manages σ persistence

    JSON: {"n": N, "l": l, "map": {"11": "23", ...}}
    compact: one "11->23" pair per line, # comments and blank lines ignored;
    for N > 9 words are written "(1,10)->(10,1)"
    """

    def load(self, path: str, fmt: str = "auto") -> SigmaSpec:
        """
        Read a σ file

        Args:
            path: File to read
            fmt: json, compact or auto (JSON iff the first non-blank char is '{')

        Returns:
            SigmaSpec

        Raises:
            SigmaParseError: unreadable file or invalid contents
        """
        status(f"🔌 Loading σ from {path}...")
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise SigmaParseError(f"Cannot read file: {e.strerror or e}", source=path) from e

        resolved = self.detect_format(text) if fmt == "auto" else fmt
        sigma = self.parse(text, resolved, source=path)
        status(f"   ✅ σ ∈ 𝔖_{{{sigma.alphabet_size},{sigma.block_length}}} ({resolved})")
        return SigmaSpec(path, resolved, sigma)

    def resolve(self, sigma_path: Optional[str], builtin: Optional[str], fmt: str = "auto") -> SigmaSpec:
        """SigmaSpec from a file path or a builtin name (exactly one)"""
        if (sigma_path is None) == (builtin is None):
            raise SigmaParseError("Give exactly one of --sigma FILE or --builtin NAME")
        if builtin is not None:
            return SigmaSpec(builtin, "builtin", get_builtin(builtin))
        return self.load(sigma_path, fmt)

    @staticmethod
    def detect_format(text: str) -> str:
        stripped = text.lstrip()
        return "json" if stripped.startswith("{") else "compact"

    def parse(self, text: str, fmt: str, source: str = "<inline>") -> MultiIndexPermutation:
        """
        Parse σ text

        Raises:
            SigmaParseError: with line / entry context where available
        """
        if fmt == "auto":
            fmt = self.detect_format(text)
        if fmt == "json":
            return self._parse_json(text, source)
        if fmt == "compact":
            return self._parse_compact(text, source)
        raise SigmaParseError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}", source=source)

    def _parse_json(self, text: str, source: str) -> MultiIndexPermutation:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SigmaParseError(f"Invalid JSON: {e.msg}", source=source, line=e.lineno) from e

        if not isinstance(data, dict):
            raise SigmaParseError("Top level must be an object", source=source)
        missing = [key for key in ("n", "l", "map") if key not in data]
        if missing:
            raise SigmaParseError(f"Missing key(s): {', '.join(missing)}", source=source)

        n, l, mapping = data["n"], data["l"], data["map"]
        if not isinstance(n, int) or not isinstance(l, int) or isinstance(n, bool) or isinstance(l, bool):
            raise SigmaParseError("'n' and 'l' must be integers", source=source)
        if not isinstance(mapping, dict):
            raise SigmaParseError("'map' must be an object of word -> word", source=source)
        if not 2 <= n <= MAX_ALPHABET_SIZE or l < 1:
            raise SigmaParseError(f"Need 2 ≤ n ≤ {MAX_ALPHABET_SIZE} and l ≥ 1, got n={n}, l={l}", source=source)
        # capped exponent: N^(m+1) > m already rules out any larger l
        if len(mapping) != n ** min(l, len(mapping) + 1):
            raise SigmaParseError(
                f"'map' has {len(mapping)} entries but N={n}, l={l} needs N^l", source=source
            )

        pairs = []
        for key, target in mapping.items():
            entry = f"{key}: {target}"
            if not isinstance(target, str):
                raise SigmaParseError("Map values must be word strings", source=source, entry=entry)
            pairs.append((self._word(key, n, l, source, None, entry), self._word(target, n, l, source, None, entry)))

        return self._build(n, l, pairs, source)

    def _parse_compact(self, text: str, source: str) -> MultiIndexPermutation:
        raw_pairs = []
        for number, line in enumerate(text.splitlines(), start=1):
            content = line.split("#", 1)[0].strip()
            if not content:
                continue
            if "->" not in content:
                raise SigmaParseError("Expected 'J->σ(J)'", source=source, line=number, entry=content)
            left, right = (part.strip() for part in content.split("->", 1))
            if not left or not right:
                raise SigmaParseError("Both sides of '->' must be words", source=source, line=number, entry=content)
            raw_pairs.append((left, right, number, content))

        if not raw_pairs:
            raise SigmaParseError("No pairs found", source=source)

        # N and l are inferred: the largest letter and the common word length
        letter_lists = []
        for left, right, number, content in raw_pairs:
            for side in (left, right):
                tokens = self._compact_tokens(side)
                if not all(token.isdigit() and int(token) >= 1 for token in tokens):
                    raise SigmaParseError("Letters must be positive integers", source=source, line=number, entry=content)
                letter_lists.append((tuple(int(token) for token in tokens), number, content))

        n = max(max(letters) for letters, _, _ in letter_lists)
        l = len(letter_lists[0][0])
        for letters, number, content in letter_lists:
            if len(letters) != l:
                raise SigmaParseError(
                    f"All words must have length {l}", source=source, line=number, entry=content
                )
        if len(raw_pairs) != n ** l:
            raise SigmaParseError(
                f"Found {len(raw_pairs)} pairs but N={n}, l={l} needs N^l = {n ** l}", source=source
            )

        pairs = []
        for i in range(0, len(letter_lists), 2):
            (source_letters, number, content), (target_letters, _, _) = letter_lists[i], letter_lists[i + 1]
            pairs.append((
                self._letters(n, source_letters, source, number, content),
                self._letters(n, target_letters, source, number, content),
            ))
        return self._build(n, l, pairs, source)

    @staticmethod
    def _word(text: str, n: int, l: int, source: str, line: Optional[int], entry: str) -> Word:
        try:
            word = parse_word(text, n)
        except CuntzError as e:
            raise SigmaParseError(str(e), source=source, line=line, entry=entry) from e
        if len(word) != l:
            raise SigmaParseError(f"Word length must be {l}", source=source, line=line, entry=entry)
        return word

    @staticmethod
    def _letters(n: int, letters: tuple[int, ...], source: str, line: int, entry: str) -> Word:
        try:
            return Word.of(n, letters)
        except CuntzError as e:
            raise SigmaParseError(str(e), source=source, line=line, entry=entry) from e

    @staticmethod
    def _compact_tokens(side: str) -> list[str]:
        """Parenthesized or comma-separated sides list letters explicitly; bare ones are digit strings"""
        if "," in side or (side.startswith("(") and side.endswith(")")):
            return [token.strip() for token in side.strip("()").split(",")]
        return list(side)

    @staticmethod
    def _compact_word(word: Word) -> str:
        if word.alphabet_size > DIGIT_TEXT_MAX_ALPHABET:
            return f"({format_word(word)})"
        return format_word(word)

    @staticmethod
    def _build(n: int, l: int, pairs: list[tuple[Word, Word]], source: str) -> MultiIndexPermutation:
        try:
            return from_pairs(n, l, pairs)
        except CuntzError as e:
            raise SigmaParseError(str(e), source=source) from e

    def dumps(self, sigma: MultiIndexPermutation, fmt: str = "json") -> str:
        """Serialize σ; pairs in rank order of J"""
        pairs = to_pairs(sigma)
        if fmt == "json":
            data = {
                "n": sigma.alphabet_size,
                "l": sigma.block_length,
                "map": {format_word(a): format_word(b) for a, b in pairs},
            }
            return json.dumps(data, indent=2) + "\n"
        if fmt == "compact":
            return "".join(f"{self._compact_word(a)}->{self._compact_word(b)}\n" for a, b in pairs)
        raise SigmaParseError(f"Unknown format {fmt!r}")

    def save(self, sigma: MultiIndexPermutation, path: str, fmt: str = "json") -> None:
        """Write σ to a file"""
        Path(path).write_text(self.dumps(sigma, fmt), encoding="utf-8")
        status(f"💾 Saved σ to {path} ({fmt})")
