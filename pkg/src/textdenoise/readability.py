"""The five readability indices and their difficulty orderings.

Scores are computed from four text statistics taken over the unit being
scored (a single sentence or a whole document): W words, S sentences,
Syl syllables, C complex words (>= 3 syllables), M monosyllabic words.

===========  =====================================================  ==================
Index        Formula                                                Harder-to-read is
===========  =====================================================  ==================
FI           0.4 * (W/S + 100 * C/W)                                higher
FRES         206.835 - 1.015 * (W/S) - 84.6 * (Syl/W)               lower
SMOG         1.0430 * sqrt(C * 30 / S) + 3.1291                     higher
FORCAST      20 - (M * 150 / W) / 10                                higher
FKRI         0.39 * (W/S) + 11.8 * (Syl/W) - 15.59                  higher
===========  =====================================================  ==================

FORCAST is defined on 150-word samples, so the monosyllable count is
scaled proportionally to the unit's word count.  Sentence-level scoring
sets S = 1.  Scores are not clamped to their nominal grade ranges: only
the ordering matters for denoising, and ``difficulty_key`` maps every
index onto a common more-is-harder axis.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .textseg import Document, Sentence


class IndexKind(enum.Enum):
    FI = "fi"
    FRES = "fres"
    SMOG = "smog"
    FORCAST = "forcast"
    FKRI = "fkri"

    @classmethod
    def from_name(cls, name: str) -> "IndexKind":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown readability index {name!r} (expected one of: {valid})") from None


#: Indices where a higher score means harder to read; FRES is the inverse.
HIGHER_IS_HARDER = frozenset({IndexKind.FI, IndexKind.SMOG, IndexKind.FORCAST, IndexKind.FKRI})


@dataclass(frozen=True)
class ReadabilityVector:
    """All five index values for one scoring unit."""

    fi: float
    fres: float
    smog: float
    forcast: float
    fkri: float
    basis: str  # "sentence" | "document"

    def get(self, kind: IndexKind) -> float:
        return getattr(self, kind.value)

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.fi, self.fres, self.smog, self.forcast, self.fkri)


def _unit_counts(unit: Sentence | Document) -> tuple[int, int, int, int, int]:
    """(W, S, Syl, C, M) for a sentence (S = 1) or a document."""
    if isinstance(unit, Sentence):
        return unit.word_count, 1, unit.syllable_count, unit.complex_word_count, unit.monosyllable_count
    words = sum(s.word_count for s in unit.sentences)
    syl = sum(s.syllable_count for s in unit.sentences)
    cx = sum(s.complex_word_count for s in unit.sentences)
    mono = sum(s.monosyllable_count for s in unit.sentences)
    return words, len(unit.sentences), syl, cx, mono


def _compute(w: int, s: int, syl: int, cx: int, mono: int) -> ReadabilityVector:
    if w < 1 or s < 1:
        raise ValueError("unscorable unit: needs at least one word and one sentence")
    wps = w / s
    spw = syl / w
    return ReadabilityVector(
        fi=0.4 * (wps + 100.0 * cx / w),
        fres=206.835 - 1.015 * wps - 84.6 * spw,
        smog=1.0430 * math.sqrt(cx * 30.0 / s) + 3.1291,
        forcast=20.0 - (mono * 150.0 / w) / 10.0,
        fkri=0.39 * wps + 11.8 * spw - 15.59,
        basis="sentence" if s == 1 else "document",
    )


def score_vector(unit: Sentence | Document) -> ReadabilityVector:
    """All five scores for a sentence or document."""
    vec = _compute(*_unit_counts(unit))
    if isinstance(unit, Document) and len(unit.sentences) == 1:
        return ReadabilityVector(*vec.as_tuple(), basis="document")
    return vec


def score(unit: Sentence | Document, kind: IndexKind) -> float:
    """One index value for a sentence or document."""
    return score_vector(unit).get(kind)


def score_all(doc: Document) -> list[tuple[int, ReadabilityVector]]:
    """Per-sentence vectors, in document order."""
    return [(s.index, score_vector(s)) for s in doc.sentences]


def difficulty_key(value: float, kind: IndexKind) -> float:
    """Map a raw score onto an axis where larger always means harder."""
    return value if kind in HIGHER_IS_HARDER else -value


def score_rows(doc: Document) -> list[tuple]:
    """Export rows ``(doc_id, sentence_index, fi, fres, smog, forcast, fkri)``."""
    return [
        (doc.id, idx) + vec.as_tuple()
        for idx, vec in score_all(doc)
    ]
