"""Split documents into denoised text (hardest-to-read fraction) and noise.

The denoised part is the top ``ceil(threshold * n)`` sentences ranked by
difficulty for the configured index, ties broken by earlier document
position.  Both parts keep document order, so exported corpora read as
coherent (if abridged) text rather than a difficulty-sorted jumble.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .readability import IndexKind, ReadabilityVector, difficulty_key, score_all
from .textseg import Document


@dataclass(frozen=True)
class DenoiseConfig:
    kind: IndexKind
    threshold: float = 0.30
    selection_rounding: str = "ceil"

    def __post_init__(self):
        if not 0.0 < self.threshold <= 1.0:
            raise ValueError(f"denoising threshold must be in (0, 1], got {self.threshold}")
        if self.selection_rounding != "ceil":
            raise ValueError(f"unsupported selection rounding {self.selection_rounding!r}")


@dataclass
class Partition:
    """Disjoint, exhaustive split of a document's sentence indices."""

    doc_id: str
    denoised: list[int]
    noise: list[int]
    config: DenoiseConfig

    def denoised_set(self) -> set[int]:
        return set(self.denoised)


def selection_size(threshold: float, n_sentences: int) -> int:
    """ceil(threshold * n), >= 1 for non-empty documents, capped at n.

    The small epsilon keeps float noise in threshold * n (e.g.
    0.07 * 100 == 7.000000000000001) from bumping the ceiling.
    """
    k = math.ceil(threshold * n_sentences - 1e-9)
    return max(1, min(n_sentences, k))


def denoise(doc: Document, scores: list[ReadabilityVector], config: DenoiseConfig) -> Partition:
    """Partition ``doc`` using per-sentence score vectors aligned by index."""
    n = len(doc.sentences)
    if n < 1:
        raise ValueError(f"document {doc.id!r} has no sentences")
    if len(scores) != n:
        raise ValueError(
            f"document {doc.id!r}: {n} sentences but {len(scores)} score vectors"
        )
    k = selection_size(config.threshold, n)
    order = sorted(
        range(n),
        key=lambda i: (-difficulty_key(scores[i].get(config.kind), config.kind), i),
    )
    chosen = sorted(order[:k])
    rest = sorted(order[k:])
    return Partition(doc_id=doc.id, denoised=chosen, noise=rest, config=config)


def denoise_document(doc: Document, config: DenoiseConfig) -> Partition:
    """Score and partition in one step."""
    return denoise(doc, [vec for _, vec in score_all(doc)], config)


def sweep(doc: Document, kind: IndexKind, thresholds: list[float]) -> list[tuple[float, Partition]]:
    """One partition per threshold; partitions nest as thresholds grow."""
    for t in thresholds:
        if not 0.0 < t <= 1.0:
            raise ValueError(f"denoising threshold must be in (0, 1], got {t}")
    scores = [vec for _, vec in score_all(doc)]
    return [
        (t, denoise(doc, scores, DenoiseConfig(kind=kind, threshold=t)))
        for t in thresholds
    ]


def stability_report(
    doc: Document,
    kind: IndexKind,
    pairs: list,
    thresholds: list[float],
) -> list[tuple[float, object, int]]:
    """Co-occurrence frequency of each concept pair inside the denoised part,
    per threshold.  Frequencies are non-decreasing in the threshold because
    the partitions nest.
    """
    from .relminer import sentences_containing_pair

    if not pairs:
        raise ValueError("stability report needs at least one concept pair")
    hits_by_pair = {pair: sentences_containing_pair(doc, pair) for pair in pairs}
    rows = []
    for t, partition in sweep(doc, kind, thresholds):
        denoised = partition.denoised_set()
        for pair in pairs:
            rows.append((t, pair, len(hits_by_pair[pair] & denoised)))
    return rows


def denoised_text(doc: Document, partition: Partition) -> str:
    """Denoised sentences in document order, one per line."""
    return "\n".join(doc.sentences[i].text for i in partition.denoised)


def export_denoised_corpus(docs: list[Document], config: DenoiseConfig, out_dir) -> list[str]:
    """Write ``<doc_id>.denoised.txt`` per document; returns the paths written."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for doc in docs:
        partition = denoise_document(doc, config)
        path = os.path.join(out_dir, f"{doc.id}.denoised.txt")
        atomic_write_text(path, denoised_text(doc, partition) + "\n")
        written.append(path)
    return written


def atomic_write_text(path, text: str) -> None:
    """Write via temp file + rename so partial output never lands at ``path``."""
    tmp = f"{path}.tmp"
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise OSError(f"failed writing {path}: {exc}") from exc
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def partition_rows(partition: Partition) -> list[tuple[str, int, str]]:
    """Export rows ``(doc_id, sentence_index, part)`` in sentence order."""
    labels = [(i, "denoised") for i in partition.denoised] + [(i, "noise") for i in partition.noise]
    return [(partition.doc_id, i, part) for i, part in sorted(labels)]
