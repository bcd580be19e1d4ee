"""textdenoise: extract the information-rich, hardest-to-read fraction of a
document by sentence-level readability, plus the mining and evaluation
machinery built on top of it.
"""

from .denoiser import (
    DenoiseConfig,
    Partition,
    denoise,
    denoise_document,
    export_denoised_corpus,
    stability_report,
    sweep,
)
from .evalstats import (
    ConfusionCounts,
    FoldScores,
    TTestResult,
    kfold_split,
    macro_average,
    micro_average,
    paired_t,
    prf,
)
from .mlprep import (
    FEATURE_NAMES,
    FeatureVector,
    LexiconSet,
    SmoteConfig,
    balance_report,
    extract_features,
    smote,
)
from .readability import (
    IndexKind,
    ReadabilityVector,
    difficulty_key,
    score,
    score_all,
    score_vector,
)
from .relminer import (
    ConceptPair,
    RankedPair,
    accuracy_against_gold,
    cooccurrence_counts,
    mine_corpus,
    rank_by_frequency,
    rerank_by_ppv_sensitivity,
)
from .textseg import Document, Sentence, Token, count_syllables, segment, sentence_stats

__version__ = "0.1.0"

__all__ = [
    "ConceptPair",
    "ConfusionCounts",
    "DenoiseConfig",
    "Document",
    "FEATURE_NAMES",
    "FeatureVector",
    "FoldScores",
    "IndexKind",
    "LexiconSet",
    "Partition",
    "RankedPair",
    "ReadabilityVector",
    "Sentence",
    "SmoteConfig",
    "TTestResult",
    "Token",
    "accuracy_against_gold",
    "balance_report",
    "cooccurrence_counts",
    "count_syllables",
    "denoise",
    "denoise_document",
    "difficulty_key",
    "export_denoised_corpus",
    "extract_features",
    "kfold_split",
    "macro_average",
    "micro_average",
    "mine_corpus",
    "paired_t",
    "prf",
    "rank_by_frequency",
    "rerank_by_ppv_sensitivity",
    "score",
    "score_all",
    "score_vector",
    "segment",
    "sentence_stats",
    "smote",
    "stability_report",
    "sweep",
]
