"""Deterministic sentence segmentation, tokenization, and syllable counting.

Everything downstream (readability scoring, denoising, mining) consumes the
``Document``/``Sentence``/``Token`` structures built here.  The rules are
deliberately simple and rule-based so that identical input always produces
identical output:

* tokens are whitespace-delimited chunks with leading/trailing punctuation
  stripped; internal hyphens and apostrophes keep a token whole
  ("large-scale" is one word);
* sentences split on ``.``, ``!``, ``?`` followed by whitespace and an
  uppercase letter, digit, or opening quote, guarded by an abbreviation
  list ("Dr. Smith" does not split);
* syllables are counted by vowel-group runs (a, e, i, o, u, y) with a
  silent trailing-e adjustment, a trailing "-le" adjustment, and a small
  exception table that can be extended from a lexicon file;
* digit groups count one syllable each, so "2012" and "10min" are scorable
  word tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

VOWELS = frozenset("aeiouy")

# Words the vowel-run heuristic gets wrong; loadable overrides are merged
# on top of these (see load_syllable_exceptions).
DEFAULT_SYLLABLE_EXCEPTIONS: dict[str, int] = {
    "area": 3,
    "being": 2,
    "create": 2,
    "creates": 2,
    "idea": 3,
    "ion": 2,
    "ions": 2,
    "ischemia": 4,
    "ischemic": 3,
    "naive": 2,
    "quiet": 2,
    "science": 2,
    "sciences": 3,
}

# Dotted abbreviations that must not terminate a sentence even when the
# next word is capitalized.  Stored lowercased with the trailing dot.
DEFAULT_ABBREVIATIONS = frozenset({
    "dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "jr.", "sr.",
    "fig.", "figs.", "eq.", "ref.", "refs.", "vol.", "no.", "ca.",
    "e.g.", "i.e.", "et", "al.", "vs.", "approx.", "a.m.", "p.m.",
    "ph.d.", "m.d.", "b.sc.", "m.sc.", "inc.", "u.s.",
})


@dataclass(frozen=True)
class Token:
    """One whitespace-delimited token.

    ``normalized`` is the lowercased surface with leading/trailing
    punctuation stripped; it is empty exactly when the token is not a word.
    Word tokens always carry at least one syllable.
    """

    surface: str
    normalized: str
    syllables: int
    is_word: bool


@dataclass
class Sentence:
    """A segmented sentence with the counts every readability formula needs."""

    index: int
    text: str
    tokens: list[Token]
    word_count: int
    syllable_count: int
    complex_word_count: int
    monosyllable_count: int

    def word_tokens(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]


@dataclass
class Document:
    """An ordered list of sentences; empty sentences are dropped at build time."""

    id: str
    sentences: list[Sentence]
    source_path: str | None = None


def load_syllable_exceptions(path) -> dict[str, int]:
    """Read ``word<TAB>count`` overrides and merge them over the defaults."""
    table = dict(DEFAULT_SYLLABLE_EXCEPTIONS)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'word<TAB>count', got {line!r}")
            table[parts[0].lower()] = int(parts[1])
    return table


def load_abbreviations(path) -> frozenset[str]:
    """Read one abbreviation per line; replaces the default list."""
    entries = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip().lower()
            if line and not line.startswith("#"):
                entries.add(line if line.endswith(".") else line + ".")
    return frozenset(entries)


def count_syllables(word: str, exceptions: dict[str, int] | None = None) -> int:
    """Count syllables in a word containing at least one letter.

    Rules: maximal vowel runs (a, e, i, o, u, y) count one syllable each,
    digit groups count one each, a silent trailing "e" is subtracted unless
    that would reach zero, and a trailing "le" after a consonant keeps its
    syllable.  Case-insensitive, always >= 1.
    """
    lowered = word.lower()
    if not any(c.isalpha() for c in lowered):
        raise ValueError(f"not a word: {word!r}")
    if exceptions is None:
        exceptions = DEFAULT_SYLLABLE_EXCEPTIONS
    if lowered in exceptions:
        return exceptions[lowered]

    count = 0
    prev_vowel = False
    for c in lowered:
        is_vowel = c in VOWELS
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    count += len(re.findall(r"\d+", lowered))

    if lowered.endswith("e"):
        silent = True
        if len(lowered) > 2 and lowered.endswith("le") and lowered[-3] not in VOWELS:
            silent = False  # "table": the -le carries a syllable
        if silent and count > 1:
            count -= 1
    return max(count, 1)


def _make_token(surface: str, exceptions: dict[str, int] | None) -> Token:
    normalized = _strip_outer_punct(surface.lower())
    if not normalized:
        return Token(surface=surface, normalized="", syllables=0, is_word=False)
    if any(c.isalpha() for c in normalized):
        syllables = count_syllables(normalized, exceptions)
    else:
        # pure digit groups: one syllable per group ("2012" -> 1)
        syllables = max(len(re.findall(r"\d+", normalized)), 1)
    return Token(surface=surface, normalized=normalized, syllables=syllables, is_word=True)


def _strip_outer_punct(s: str) -> str:
    start, end = 0, len(s)
    while start < end and not s[start].isalnum():
        start += 1
    while end > start and not s[end - 1].isalnum():
        end -= 1
    return s[start:end]


def tokenize(text: str, exceptions: dict[str, int] | None = None) -> list[Token]:
    """Split on whitespace and classify each chunk as word or punctuation."""
    return [_make_token(chunk, exceptions) for chunk in text.split()]


def sentence_stats(tokens: list[Token]) -> tuple[int, int, int, int]:
    """Return (word_count, syllable_count, complex_word_count, monosyllable_count)."""
    words = [t for t in tokens if t.is_word]
    word_count = len(words)
    syllable_count = sum(t.syllables for t in words)
    complex_count = sum(1 for t in words if t.syllables >= 3)
    mono_count = sum(1 for t in words if t.syllables == 1)
    return word_count, syllable_count, complex_count, mono_count


_TERMINATOR = re.compile(r"[.!?]+")
_OPENERS = "\"'“‘(["


def _is_boundary(text: str, end: int, abbreviations: frozenset[str]) -> bool:
    """Decide whether the terminator run ending at ``end`` closes a sentence."""
    rest = text[end:]
    stripped = rest.lstrip()
    if stripped == rest and stripped:
        return False  # no whitespace after the terminator ("5.2", "p.m")
    if not stripped:
        return True
    nxt = stripped[0]
    if not (nxt.isupper() or nxt.isdigit() or nxt in _OPENERS):
        return False
    run = text[:end]
    if run.rstrip()[-1:] != ".":
        return True  # ! and ? need no abbreviation guard
    # the whitespace-delimited chunk ending at the candidate dot
    chunk = run.split()[-1] if run.split() else ""
    chunk = chunk.lower()
    if chunk in abbreviations:
        return False
    # single-letter initials: "J. Smith"
    if len(chunk) == 2 and chunk[0].isalpha() and chunk.endswith("."):
        return False
    return True


def segment(
    raw_text: str,
    doc_id: str = "",
    abbreviations: frozenset[str] | None = None,
    syllable_exceptions: dict[str, int] | None = None,
    source_path: str | None = None,
) -> Document:
    """Segment raw text into a Document of non-empty sentences.

    Whitespace inside each sentence is collapsed to single spaces; fragments
    with no word tokens are dropped.  Empty input yields an empty Document.
    """
    if abbreviations is None:
        abbreviations = DEFAULT_ABBREVIATIONS
    sentences: list[Sentence] = []
    start = 0
    spans: list[str] = []
    for m in _TERMINATOR.finditer(raw_text):
        if _is_boundary(raw_text, m.end(), abbreviations):
            spans.append(raw_text[start:m.end()])
            start = m.end()
    if raw_text[start:].strip():
        spans.append(raw_text[start:])

    for span in spans:
        text = " ".join(span.split())
        if not text:
            continue
        tokens = tokenize(text, syllable_exceptions)
        wc, syl, cx, mono = sentence_stats(tokens)
        if wc == 0:
            continue
        sentences.append(Sentence(
            index=len(sentences),
            text=text,
            tokens=tokens,
            word_count=wc,
            syllable_count=syl,
            complex_word_count=cx,
            monosyllable_count=mono,
        ))
    return Document(id=doc_id, sentences=sentences, source_path=source_path)
