"""Per-sentence feature vectors and SMOTE oversampling.

The feature schema is fixed (see FEATURE_NAMES): five readability scores,
surface statistics, document-relative term weights, lexicon counts, and
relative sentence position.  All features are computed from normalized
tokens except ``acronym_count``, which is case-sensitive by definition.

SMOTE generates, for each minority sample, ``oversample_multiplier``
synthetic points of the form ``x + u * (nn - x)`` with one uniform u per
synthetic sample and nn one of the k nearest minority neighbors.  Neighbor
search is exact brute-force Euclidean over z-scored features so no single
large-scale feature dominates the distances; interpolation happens in the
original feature space.  Random draws come from a per-sample seeded stream,
so output does not depend on processing order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .readability import ReadabilityVector
from .textseg import Document, _strip_outer_punct

FEATURE_NAMES = (
    "fi",
    "fres",
    "smog",
    "forcast",
    "fkri",
    "word_count",
    "syllables_per_word",
    "complex_word_count",
    "monosyllable_count",
    "mean_token_tf",
    "mean_isf",
    "stopword_ratio",
    "acronym_count",
    "entity_gazetteer_count",
    "verb_gazetteer_count",
    "relative_position",
)

POSITIVE = "positive"
NEGATIVE = "negative"


@dataclass
class FeatureVector:
    doc_id: str
    sentence_index: int
    values: list[float]
    label: str | None = None

    def __post_init__(self):
        if len(self.values) != len(FEATURE_NAMES):
            raise ValueError(
                f"expected {len(FEATURE_NAMES)} feature values, got {len(self.values)}"
            )
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError(f"non-finite feature value in {self.doc_id}:{self.sentence_index}")


@dataclass(frozen=True)
class SmoteConfig:
    k: int = 5
    oversample_multiplier: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.oversample_multiplier < 1:
            raise ValueError(f"oversample multiplier must be >= 1, got {self.oversample_multiplier}")


@dataclass
class LexiconSet:
    """Term lists backing the lexicon features; stopwords are mandatory."""

    stopwords: frozenset[str]
    entities: frozenset[str] = frozenset()
    verbs: frozenset[str] = frozenset()

    def __post_init__(self):
        if not self.stopwords:
            raise ValueError("stopword lexicon is required and must be non-empty")


def load_term_list(path) -> frozenset[str]:
    """One term per line, lowercased; blank lines and # comments skipped."""
    terms = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip().lower()
            if line and not line.startswith("#"):
                terms.add(line)
    return frozenset(terms)


def _is_acronym(surface: str) -> bool:
    core = _strip_outer_punct(surface)
    return len(core) >= 2 and core.isalpha() and core.isupper()


def extract_features(
    doc: Document,
    scores: list[ReadabilityVector],
    lexicons: LexiconSet,
) -> list[FeatureVector]:
    """One feature vector per sentence, aligned with ``scores``."""
    n = len(doc.sentences)
    if len(scores) != n:
        raise ValueError(f"document {doc.id!r}: {n} sentences but {len(scores)} score vectors")

    # document-level term statistics over normalized word tokens
    doc_tf: dict[str, int] = {}
    sentences_with: dict[str, int] = {}
    for sent in doc.sentences:
        seen = set()
        for tok in sent.word_tokens():
            doc_tf[tok.normalized] = doc_tf.get(tok.normalized, 0) + 1
            seen.add(tok.normalized)
        for w in seen:
            sentences_with[w] = sentences_with.get(w, 0) + 1

    vectors = []
    for sent, vec in zip(doc.sentences, scores):
        words = sent.word_tokens()
        content = [t.normalized for t in words if t.normalized not in lexicons.stopwords]
        mean_tf = sum(doc_tf[w] for w in content) / len(content) if content else 0.0
        mean_isf = (
            sum(math.log(n / sentences_with[w]) for w in content) / len(content)
            if content else 0.0
        )
        stop_ratio = sum(1 for t in words if t.normalized in lexicons.stopwords) / len(words)
        values = [
            vec.fi,
            vec.fres,
            vec.smog,
            vec.forcast,
            vec.fkri,
            float(sent.word_count),
            sent.syllable_count / sent.word_count,
            float(sent.complex_word_count),
            float(sent.monosyllable_count),
            mean_tf,
            mean_isf,
            stop_ratio,
            float(sum(1 for t in sent.tokens if _is_acronym(t.surface))),
            float(sum(1 for t in words if t.normalized in lexicons.entities)),
            float(sum(1 for t in words if t.normalized in lexicons.verbs)),
            sent.index / (n - 1) if n > 1 else 0.0,
        ]
        vectors.append(FeatureVector(doc_id=doc.id, sentence_index=sent.index, values=values))
    return vectors


def smote(minority: list[FeatureVector], config: SmoteConfig) -> list[FeatureVector]:
    """Synthetic minority samples, ``oversample_multiplier`` per input sample."""
    m = len(minority)
    if m < 2:
        raise ValueError(f"SMOTE needs at least 2 minority samples, got {m}")
    if config.k > m - 1:
        raise ValueError(f"k={config.k} but only {m - 1} possible neighbors")

    x = np.array([fv.values for fv in minority], dtype=float)
    mu = x.mean(axis=0)
    sigma = x.std(axis=0)
    sigma[sigma == 0.0] = 1.0
    z = (x - mu) / sigma

    def k_nearest(i: int) -> np.ndarray:
        # exact brute-force on standardized features; ties resolved by index
        dist = np.sqrt(((z - z[i]) ** 2).sum(axis=1))
        dist[i] = np.inf
        return np.argsort(dist, kind="stable")[:config.k]

    synthetic = []
    for i in range(m):
        neighbors = k_nearest(i)
        rng = np.random.default_rng([config.seed, i])
        for j in range(config.oversample_multiplier):
            nn = x[neighbors[rng.integers(config.k)]]
            u = rng.uniform(0.0, 1.0)
            point = x[i] + u * (nn - x[i])
            synthetic.append(FeatureVector(
                doc_id="synthetic",
                sentence_index=i * config.oversample_multiplier + j,
                values=point.tolist(),
                label=POSITIVE,
            ))
    return synthetic


def balance_report(data: list[FeatureVector]) -> tuple[int, int, float]:
    """(positive_count, negative_count, negative/positive skew ratio)."""
    pos = neg = 0
    for fv in data:
        if fv.label == POSITIVE:
            pos += 1
        elif fv.label == NEGATIVE:
            neg += 1
        else:
            raise ValueError(f"unlabeled vector {fv.doc_id}:{fv.sentence_index} in balance report")
    ratio = neg / pos if pos else math.inf
    return pos, neg, ratio


def load_labels(path) -> dict[tuple[str, int], str]:
    """Read ``doc_id<TAB>sentence_index<TAB>label`` records."""
    labels: dict[tuple[str, int], str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3 or parts[2] not in (POSITIVE, NEGATIVE):
                raise ValueError(
                    f"{path}:{lineno}: expected 'doc_id<TAB>index<TAB>positive|negative', got {line!r}"
                )
            labels[(parts[0], int(parts[1]))] = parts[2]
    return labels


def apply_labels(vectors: list[FeatureVector], labels: dict[tuple[str, int], str]) -> None:
    for fv in vectors:
        fv.label = labels.get((fv.doc_id, fv.sentence_index), fv.label)


def load_features_csv(path) -> list[FeatureVector]:
    """Read a CSV written by ``features_csv`` back into feature vectors."""
    vectors = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split(",")
        if header != list(FEATURE_NAMES) + ["label"]:
            raise ValueError(f"{path}: header does not match the feature schema")
        for lineno, line in enumerate(fh, 2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(FEATURE_NAMES) + 1:
                raise ValueError(f"{path}:{lineno}: expected {len(FEATURE_NAMES) + 1} fields")
            label = parts[-1] if parts[-1] in (POSITIVE, NEGATIVE) else None
            vectors.append(FeatureVector(
                doc_id=str(path),
                sentence_index=lineno - 2,
                values=[float(v) for v in parts[:-1]],
                label=label,
            ))
    return vectors


def features_csv(vectors: list[FeatureVector]) -> str:
    """Header row naming the schema, then comma-separated numeric rows with a
    trailing label column — directly loadable by external learners.
    """
    lines = [",".join(FEATURE_NAMES + ("label",))]
    for fv in vectors:
        label = fv.label if fv.label is not None else "unlabeled"
        lines.append(",".join(f"{v:.6f}" for v in fv.values) + f",{label}")
    return "\n".join(lines) + "\n"
