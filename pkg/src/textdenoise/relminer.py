"""Concept-pair mining over denoised text.

Pairs of concepts that co-occur in denoised sentences are ranked first by
raw frequency, then re-ranked by positive predictive value and sensitivity,
computed per pair from the denoised/noise split:

* TP: denoised sentences containing both concepts
* FN: noise sentences containing both concepts
* FP: denoised sentences containing exactly one of the two

Concept matching is a case-insensitive whole-token match of the concept's
token sequence against a sentence's normalized word tokens, so "ion" never
matches inside "ischemia" and multi-word concepts match contiguous runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .denoiser import Partition
from .textseg import Document, Sentence, tokenize


@dataclass(frozen=True, order=True)
class ConceptPair:
    """Unordered pair of distinct normalized concepts; (a, b) == (b, a)."""

    a: str
    b: str

    @classmethod
    def of(cls, first: str, second: str) -> "ConceptPair":
        x, y = sorted((normalize_concept(first), normalize_concept(second)))
        if x == y:
            raise ValueError(f"concept pair needs two distinct concepts, got {first!r}/{second!r}")
        return cls(x, y)

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass
class RankedPair:
    pair: ConceptPair
    frequency: int
    ppv: float
    sensitivity: float
    rank: int
    gold_related: bool | None = None


def normalize_concept(concept: str) -> str:
    """Lowercased, punctuation-stripped token sequence joined by single spaces."""
    tokens = [t.normalized for t in tokenize(concept) if t.is_word]
    if not tokens:
        raise ValueError(f"concept has no word tokens: {concept!r}")
    return " ".join(tokens)


def sentence_contains(sentence: Sentence, concept: str) -> bool:
    """Whole-token match of the concept's token run within the sentence."""
    needle = normalize_concept(concept).split(" ")
    hay = [t.normalized for t in sentence.tokens if t.is_word]
    n = len(needle)
    return any(hay[i:i + n] == needle for i in range(len(hay) - n + 1))


def sentences_containing(doc: Document, concept: str) -> set[int]:
    return {s.index for s in doc.sentences if sentence_contains(s, concept)}


def sentences_containing_pair(doc: Document, pair: ConceptPair) -> set[int]:
    return sentences_containing(doc, pair.a) & sentences_containing(doc, pair.b)


def cooccurrence_counts(
    partition: Partition, doc: Document, concepts: list[str]
) -> dict[ConceptPair, int]:
    """Denoised-sentence co-occurrence counts over all unordered concept pairs.

    Pairs that never co-occur in the denoised part are omitted.
    """
    if not concepts:
        raise ValueError("concept list is empty")
    normalized = sorted({normalize_concept(c) for c in concepts})
    hits = {c: sentences_containing(doc, c) for c in normalized}
    denoised = partition.denoised_set()
    counts: dict[ConceptPair, int] = {}
    for a, b in combinations(normalized, 2):
        n = len(hits[a] & hits[b] & denoised)
        if n > 0:
            counts[ConceptPair(a, b)] = n
    return counts


def _assign_ranks(ordered: list[RankedPair], key) -> None:
    """Competition ranking: ties share the rank of their first row."""
    for pos, rp in enumerate(ordered):
        if pos > 0 and key(rp) == key(ordered[pos - 1]):
            rp.rank = ordered[pos - 1].rank
        else:
            rp.rank = pos + 1


def rank_by_frequency(counts: dict[ConceptPair, int]) -> list[RankedPair]:
    """Descending frequency; ties broken lexicographically and sharing a rank."""
    ordered = [
        RankedPair(pair=p, frequency=c, ppv=0.0, sensitivity=0.0, rank=0)
        for p, c in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    ]
    _assign_ranks(ordered, key=lambda rp: rp.frequency)
    return ordered


def pair_contingency(
    partition: Partition, doc: Document, pair: ConceptPair
) -> tuple[int, int, int]:
    """(TP, FP, FN) for one pair: TP = denoised sentences with both concepts,
    FP = denoised sentences with exactly one, FN = noise sentences with both.
    """
    denoised = partition.denoised_set()
    noise = set(partition.noise)
    in_a = sentences_containing(doc, pair.a)
    in_b = sentences_containing(doc, pair.b)
    both = in_a & in_b
    return len(both & denoised), len((in_a ^ in_b) & denoised), len(both & noise)


def _rank_pairs(contingencies: dict[ConceptPair, tuple[int, int, int]]) -> list[RankedPair]:
    ranked = []
    for pair, (tp, fp, fn) in contingencies.items():
        ppv = tp / (tp + fp) if tp + fp else 0.0
        sens = tp / (tp + fn) if tp + fn else 0.0
        ranked.append(RankedPair(pair=pair, frequency=tp, ppv=ppv, sensitivity=sens, rank=0))
    ranked.sort(key=lambda rp: (-rp.ppv, -rp.sensitivity, rp.pair))
    _assign_ranks(ranked, key=lambda rp: (rp.ppv, rp.sensitivity))
    return ranked


def rerank_by_ppv_sensitivity(
    partition: Partition, doc: Document, counts: dict[ConceptPair, int]
) -> list[RankedPair]:
    """Re-rank pairs by (PPV, sensitivity) descending; 0/0 ratios define to 0."""
    contingencies = {pair: pair_contingency(partition, doc, pair) for pair in counts}
    return _rank_pairs(contingencies)


def mine_corpus(docs, config, concepts: list[str], rank_by: str = "ppv") -> list[RankedPair]:
    """Mine every document at ``config`` and merge by summing per-pair counts.

    Pairs that never co-occur in any denoised part are dropped; the merged
    contingencies feed either the PPV/sensitivity re-ranking (default) or
    the plain frequency ranking.
    """
    from .denoiser import denoise_document

    if rank_by not in ("ppv", "frequency"):
        raise ValueError(f"rank_by must be 'ppv' or 'frequency', got {rank_by!r}")
    normalized = sorted({normalize_concept(c) for c in concepts})
    if len(normalized) < 2:
        raise ValueError("mining needs at least two distinct concepts")
    totals: dict[ConceptPair, list[int]] = {}
    for doc in docs:
        partition = denoise_document(doc, config)
        for a, b in combinations(normalized, 2):
            tp, fp, fn = pair_contingency(partition, doc, ConceptPair(a, b))
            if tp + fp + fn:
                acc = totals.setdefault(ConceptPair(a, b), [0, 0, 0])
                acc[0] += tp
                acc[1] += fp
                acc[2] += fn
    present = {pair: tuple(c) for pair, c in totals.items() if c[0] > 0}
    if rank_by == "frequency":
        return rank_by_frequency({pair: c[0] for pair, c in present.items()})
    return _rank_pairs(present)


def accuracy_against_gold(ranked: list[RankedPair], gold: set[ConceptPair]) -> float:
    """Fraction of ranked pairs that appear in the gold relation set."""
    if not ranked:
        raise ValueError("ranked pair list is empty")
    return sum(1 for rp in ranked if rp.pair in gold) / len(ranked)


def mark_gold(ranked: list[RankedPair], gold: set[ConceptPair]) -> None:
    for rp in ranked:
        rp.gold_related = rp.pair in gold


def load_concepts(path) -> list[str]:
    """One concept per line; blank lines and # comments skipped."""
    concepts = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                concepts.append(line)
    if not concepts:
        raise ValueError(f"no concepts found in {path}")
    return concepts


def load_gold(path) -> set[ConceptPair]:
    """Tab-separated ``conceptA<TAB>conceptB`` per line."""
    gold = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'a<TAB>b', got {line!r}")
            gold.add(ConceptPair.of(parts[0], parts[1]))
    return gold


def ranked_rows(ranked: list[RankedPair]) -> list[tuple]:
    """Export rows ``(rank, a, b, frequency, ppv, sensitivity, gold)``."""
    rows = []
    for rp in ranked:
        gold = "" if rp.gold_related is None else ("Yes" if rp.gold_related else "No")
        rows.append((rp.rank, rp.pair.a, rp.pair.b, rp.frequency, rp.ppv, rp.sensitivity, gold))
    return rows
