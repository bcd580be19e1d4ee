"""Evaluation statistics: P/R/F with micro and macro averaging, k-fold
splits, and the paired t-test used to compare per-fold scores.

Degenerate 0/0 ratios define to 0 throughout so metrics stay total.
Macro-F is the harmonic mean of macro-precision and macro-recall (not the
mean of per-item F scores).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

# Two-tailed Student's t critical value at df = 9, 95% confidence.  Results
# of a 10-fold experiment are significant when t reaches this bar.
SIGNIFICANCE_T_10FOLD = 2.26


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn) < 0:
            raise ValueError(f"confusion counts must be non-negative: {self}")


@dataclass(frozen=True)
class FoldScores:
    """Per-fold scores for two systems under comparison."""

    system_a: list[float]
    system_b: list[float]

    def __post_init__(self):
        if len(self.system_a) != len(self.system_b):
            raise ValueError(
                f"fold score lists differ in length: {len(self.system_a)} vs {len(self.system_b)}"
            )
        if len(self.system_a) < 2:
            raise ValueError("paired comparison needs at least 2 folds")

    @property
    def folds(self) -> int:
        return len(self.system_a)


@dataclass(frozen=True)
class TTestResult:
    t: float
    #: t >= 2.26 when folds == 10; None otherwise (no calibrated bar).
    significant: bool | None


def prf(c: ConfusionCounts) -> tuple[float, float, float]:
    """(precision, recall, F1) with 0/0 -> 0."""
    p = c.tp / (c.tp + c.fp) if c.tp + c.fp else 0.0
    r = c.tp / (c.tp + c.fn) if c.tp + c.fn else 0.0
    f = 2 * p * r / (p + r) if p + r else 0.0
    return p, r, f


def micro_average(per_item: list[ConfusionCounts]) -> tuple[float, float, float]:
    """P/R/F of the element-wise summed counts."""
    if not per_item:
        raise ValueError("micro average of an empty count list")
    total = ConfusionCounts(
        tp=sum(c.tp for c in per_item),
        fp=sum(c.fp for c in per_item),
        fn=sum(c.fn for c in per_item),
    )
    return prf(total)


def macro_average(per_item: list[ConfusionCounts]) -> tuple[float, float, float]:
    """Unweighted mean of per-item P and R; F is their harmonic mean."""
    if not per_item:
        raise ValueError("macro average of an empty count list")
    ps, rs = zip(*((prf(c)[0], prf(c)[1]) for c in per_item))
    p = sum(ps) / len(ps)
    r = sum(rs) / len(rs)
    f = 2 * p * r / (p + r) if p + r else 0.0
    return p, r, f


def kfold_split(item_ids: list, k: int, seed: int) -> list[list]:
    """Shuffle ids with ``seed`` and deal them into k folds whose sizes
    differ by at most one.  Deterministic for a given seed.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > len(item_ids):
        raise ValueError(f"cannot split {len(item_ids)} items into {k} folds")
    ids = list(item_ids)
    random.Random(seed).shuffle(ids)
    base, extra = divmod(len(ids), k)
    folds = []
    start = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        folds.append(ids[start:start + size])
        start += size
    return folds


def paired_t(f: FoldScores) -> TTestResult:
    """Two-tailed paired Student's t over per-fold differences a - b.

    Zero-variance differences collapse to t = 0 (all-zero) or a signed
    infinity sentinel (constant nonzero shift).  The significance flag is
    only populated for 10-fold runs, where 2.26 is the calibrated bar.
    """
    n = f.folds
    d = [a - b for a, b in zip(f.system_a, f.system_b)]
    mean = sum(d) / n
    var = sum((x - mean) ** 2 for x in d) / (n - 1)
    if var == 0.0:
        t = 0.0 if mean == 0.0 else math.copysign(math.inf, mean)
    else:
        t = mean / math.sqrt(var / n)
    significant = (t >= SIGNIFICANCE_T_10FOLD) if n == 10 else None
    return TTestResult(t=t, significant=significant)


def metrics_report_rows(per_index: dict[str, list[ConfusionCounts]]) -> list[tuple]:
    """Rows ``(index, micro_p, micro_r, micro_f, macro_p, macro_r, macro_f)``
    as percentages, one per index kind, in the given key order.
    """
    rows = []
    for index_name, counts in per_index.items():
        mi = micro_average(counts)
        ma = macro_average(counts)
        rows.append((index_name,) + tuple(100.0 * v for v in mi + ma))
    return rows
