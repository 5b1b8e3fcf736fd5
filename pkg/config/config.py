"""
Configuration settings for the branching-law toolkit
"""

# ==================== Alphabet & Words ====================
MAX_ALPHABET_SIZE = 64
MAX_WORD_LENGTH = 10_000  # words read from text
DIGIT_TEXT_MAX_ALPHABET = 9  # digit-string text form up to here, comma form above

# ==================== Resource Guards ====================
ENUMERATE_GUARD = 9  # largest N^l that enumerate() accepts without override (9! tables)
SIGNATURE_WORD_CAP = 250_000  # largest N^max_len any word sweep accepts

# ==================== Oracle Fuzzing ====================
FUZZ_DEFAULT_COUNT = 500
FUZZ_DEFAULT_SEED = 0
FUZZ_ALPHABET_SIZES = (2, 3)
FUZZ_BLOCK_LENGTHS = (1, 2, 3)
FUZZ_MAX_WORD_LENGTH = 5

# ==================== Analysis ====================
DEFAULT_CERTIFY_MAX_LEN = 6
CLASSIFY_SAMPLE_WITNESSES = 3
SIGNATURE_HASH_LENGTH = 12


# ==================== Validation ====================
def validate_config():
    """Validate that all settings are usable"""
    problems = []

    if MAX_ALPHABET_SIZE < 2:
        problems.append("MAX_ALPHABET_SIZE must be at least 2")
    if MAX_WORD_LENGTH < 1:
        problems.append("MAX_WORD_LENGTH must be positive")
    if not 2 <= DIGIT_TEXT_MAX_ALPHABET <= 9:
        problems.append("DIGIT_TEXT_MAX_ALPHABET must lie in 2..9")
    if ENUMERATE_GUARD < 1:
        problems.append("ENUMERATE_GUARD must be positive")
    if SIGNATURE_WORD_CAP < 2:
        problems.append("SIGNATURE_WORD_CAP must be at least 2")
    if FUZZ_DEFAULT_COUNT < 0:
        problems.append("FUZZ_DEFAULT_COUNT must not be negative")
    if any(n < 2 or n > MAX_ALPHABET_SIZE for n in FUZZ_ALPHABET_SIZES):
        problems.append("FUZZ_ALPHABET_SIZES must lie in 2..MAX_ALPHABET_SIZE")
    if any(l < 1 for l in FUZZ_BLOCK_LENGTHS):
        problems.append("FUZZ_BLOCK_LENGTHS must be positive")
    if FUZZ_MAX_WORD_LENGTH < 1:
        problems.append("FUZZ_MAX_WORD_LENGTH must be positive")
    if CLASSIFY_SAMPLE_WITNESSES < 1:
        problems.append("CLASSIFY_SAMPLE_WITNESSES must be positive")
    if not 4 <= SIGNATURE_HASH_LENGTH <= 40:
        problems.append("SIGNATURE_HASH_LENGTH must lie in 4..40")

    if problems:
        raise ValueError(f"Invalid configuration: {'; '.join(problems)}")

    return True
