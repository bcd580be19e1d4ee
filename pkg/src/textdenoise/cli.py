"""Command-line entry point.

Subcommands: score, denoise, sweep, mine, eval, features, smote.  Tabular
output is tab-separated with a header line; reals use 4 decimal places
(2 in percent reports) so outputs are byte-stable across runs.  Data goes
to ``--out`` (written atomically) or stdout; diagnostics go to stderr.

Exit codes: 0 success, 2 for usage/validation problems (unknown command,
bad flag value, missing input path), 1 for failures during execution.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import data as bundled
from .denoiser import (
    DenoiseConfig,
    atomic_write_text,
    denoise_document,
    export_denoised_corpus,
    partition_rows,
    sweep,
)
from .evalstats import ConfusionCounts, metrics_report_rows
from .mlprep import (
    LexiconSet,
    SmoteConfig,
    apply_labels,
    extract_features,
    features_csv,
    load_features_csv,
    load_labels,
    load_term_list,
    smote,
)
from .readability import IndexKind, score_all, score_rows
from .relminer import (
    accuracy_against_gold,
    load_concepts,
    load_gold,
    mark_gold,
    mine_corpus,
    ranked_rows,
)
from .textseg import (
    Document,
    load_abbreviations,
    load_syllable_exceptions,
    segment,
)

LEXICON_DIR_ENV = "TEXTDENOISE_LEXICONS"


class UsageError(Exception):
    """Flag/validation problem; maps to exit code 2."""


def _diag(args, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(message, file=sys.stderr)


def _resolve_lexicon(flag_value: str | None, name: str) -> Path | None:
    """Explicit flag > $TEXTDENOISE_LEXICONS/<name>.txt > None."""
    if flag_value:
        return Path(flag_value)
    env_dir = os.environ.get(LEXICON_DIR_ENV)
    if env_dir:
        candidate = Path(env_dir) / f"{name}.txt"
        if candidate.exists():
            return candidate
    return None


def _require_exists(path: str | None, what: str) -> None:
    if path is not None and not os.path.exists(path):
        raise UsageError(f"{what} does not exist: {path}")


def load_corpus(dir_or_file, abbreviations=None, syllable_exceptions=None) -> list[Document]:
    """One Document per ``.txt`` file of a directory (lexicographic order),
    or a single Document for a regular file.  doc_id is the file stem.
    """
    path = Path(dir_or_file)
    if not path.exists():
        raise UsageError(f"input path does not exist: {path}")
    files = [path]
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file())
        kept = []
        for p in files:
            if p.suffix == ".txt":
                kept.append(p)
            else:
                print(f"skipping non-.txt file: {p}", file=sys.stderr)
        files = kept
        if not files:
            print(f"warning: no .txt files in {path}", file=sys.stderr)
    docs = []
    for p in files:
        try:
            raw = p.read_bytes().decode("utf-8")
        except OSError as exc:
            raise OSError(f"cannot read {p}: {exc}") from exc
        except UnicodeDecodeError as exc:
            raise ValueError(f"{p}: undecodable byte at offset {exc.start}") from exc
        docs.append(segment(
            raw,
            doc_id=p.stem,
            abbreviations=abbreviations,
            syllable_exceptions=syllable_exceptions,
            source_path=str(p),
        ))
    return docs


def _segmentation_options(args) -> dict:
    abbr_path = _resolve_lexicon(getattr(args, "abbreviations", None), "abbreviations")
    exc_path = _resolve_lexicon(getattr(args, "syllable_exceptions", None), "syllable_exceptions")
    return {
        "abbreviations": load_abbreviations(abbr_path) if abbr_path else None,
        "syllable_exceptions": load_syllable_exceptions(exc_path) if exc_path else None,
    }


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _table(header: list[str], rows: list[tuple]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        atomic_write_text(out_path, text)
    else:
        sys.stdout.write(text)


def _parse_thresholds(raw: str) -> list[float]:
    try:
        values = [float(chunk) for chunk in raw.split(",") if chunk.strip()]
    except ValueError:
        raise UsageError(f"bad threshold list: {raw!r}") from None
    if not values:
        raise UsageError(f"bad threshold list: {raw!r}")
    for v in values:
        _check_threshold(v)
    return values


def _check_threshold(value: float) -> None:
    if not 0.0 < value <= 1.0:
        raise UsageError(f"threshold must be in (0, 1], got {value}")


def _cmd_score(args) -> int:
    _check_inputs(args)
    docs = load_corpus(args.input, **_segmentation_options(args))
    rows = []
    for doc in docs:
        rows.extend(score_rows(doc))
    _emit(_table(["doc_id", "sentence_index", "fi", "fres", "smog", "forcast", "fkri"], rows),
          args.out)
    _diag(args, f"scored {sum(len(d.sentences) for d in docs)} sentences in {len(docs)} documents")
    return 0


def _cmd_denoise(args) -> int:
    _check_threshold(args.threshold)
    _check_inputs(args)
    docs = load_corpus(args.input, **_segmentation_options(args))
    config = DenoiseConfig(kind=IndexKind.from_name(args.index), threshold=args.threshold)
    rows = []
    for doc in docs:
        rows.extend(partition_rows(denoise_document(doc, config)))
    _emit(_table(["doc_id", "sentence_index", "part"], rows), args.out)
    if args.export_dir:
        written = export_denoised_corpus(docs, config, args.export_dir)
        _diag(args, f"exported {len(written)} denoised files to {args.export_dir}")
    return 0


def _cmd_sweep(args) -> int:
    thresholds = _parse_thresholds(args.thresholds)
    _check_inputs(args)
    docs = load_corpus(args.input, **_segmentation_options(args))
    kind = IndexKind.from_name(args.index)
    rows = []
    for doc in docs:
        for t, partition in sweep(doc, kind, thresholds):
            rows.extend((doc_id, t, idx, part)
                        for doc_id, idx, part in partition_rows(partition))
    _emit(_table(["doc_id", "threshold", "sentence_index", "part"], rows), args.out)
    return 0


def _cmd_mine(args) -> int:
    _check_threshold(args.threshold)
    _check_inputs(args, extra=[(args.concepts, "concepts file"), (args.gold, "gold file")])
    docs = load_corpus(args.input, **_segmentation_options(args))
    concepts = load_concepts(args.concepts)
    config = DenoiseConfig(kind=IndexKind.from_name(args.index), threshold=args.threshold)
    ranked = mine_corpus(docs, config, concepts, rank_by=args.rank_by)
    if args.gold:
        gold = load_gold(args.gold)
        mark_gold(ranked, gold)
        if ranked:
            _diag(args, f"accuracy against gold: {accuracy_against_gold(ranked, gold):.4f}")
    _emit(_table(["rank", "a", "b", "frequency", "ppv", "sensitivity", "gold"],
                 ranked_rows(ranked)), args.out)
    _diag(args, f"mined {len(ranked)} co-occurring pairs from {len(docs)} documents")
    return 0


def _cmd_eval(args) -> int:
    _check_inputs(args)
    per_index: dict[str, list[ConfusionCounts]] = {}
    with open(args.input, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if header != ["index", "tp", "fp", "fn"]:
            raise ValueError(
                f"{args.input}: expected header 'index\\ttp\\tfp\\tfn', got {header}"
            )
        for lineno, line in enumerate(fh, 2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise ValueError(f"{args.input}:{lineno}: expected 4 fields, got {line!r}")
            per_index.setdefault(parts[0], []).append(
                ConfusionCounts(tp=int(parts[1]), fp=int(parts[2]), fn=int(parts[3]))
            )
    if not per_index:
        raise ValueError(f"{args.input}: no count records")
    rows = [
        (row[0],) + tuple(f"{v:.2f}" for v in row[1:])
        for row in metrics_report_rows(per_index)
    ]
    _emit(_table(["index", "micro_p", "micro_r", "micro_f", "macro_p", "macro_r", "macro_f"],
                 rows), args.out)
    return 0


def _cmd_features(args) -> int:
    _check_inputs(args, extra=[
        (args.entities, "entity lexicon"),
        (args.verbs, "verb lexicon"),
        (args.labels, "labels file"),
    ])
    stop_path = _resolve_lexicon(args.stopwords, "stopwords") or bundled.stopwords_path()
    _require_exists(str(stop_path), "stopword lexicon")
    entities_path = _resolve_lexicon(args.entities, "entities")
    verbs_path = _resolve_lexicon(args.verbs, "verbs")
    lexicons = LexiconSet(
        stopwords=load_term_list(stop_path),
        entities=load_term_list(entities_path) if entities_path else frozenset(),
        verbs=load_term_list(verbs_path) if verbs_path else frozenset(),
    )
    docs = load_corpus(args.input, **_segmentation_options(args))
    vectors = []
    for doc in docs:
        vectors.extend(extract_features(doc, [v for _, v in score_all(doc)], lexicons))
    if args.labels:
        apply_labels(vectors, load_labels(args.labels))
    _emit(features_csv(vectors), args.out)
    _diag(args, f"extracted {len(vectors)} feature vectors")
    return 0


def _cmd_smote(args) -> int:
    if args.k < 1:
        raise UsageError(f"k must be >= 1, got {args.k}")
    if args.multiplier < 1:
        raise UsageError(f"multiplier must be >= 1, got {args.multiplier}")
    _check_inputs(args)
    vectors = load_features_csv(args.input)
    minority = [fv for fv in vectors if fv.label == "positive"]
    if len(minority) < 2:
        raise ValueError(f"{args.input}: need >= 2 positive rows for SMOTE, found {len(minority)}")
    config = SmoteConfig(k=args.k, oversample_multiplier=args.multiplier, seed=args.seed)
    synthetic = smote(minority, config)
    _emit(features_csv(synthetic), args.out)
    _diag(args, f"generated {len(synthetic)} synthetic positives from {len(minority)} samples")
    return 0


def _check_inputs(args, extra: list[tuple[str | None, str]] | None = None) -> None:
    """Fail fast on missing paths before any input is opened."""
    _require_exists(args.input, "input path")
    for path, what in (extra or []):
        _require_exists(path, what)


def _add_common(parser, lexicons=True) -> None:
    parser.add_argument("--in", dest="input", required=True, help="input file or directory")
    parser.add_argument("--out", default=None, help="output file (default: stdout)")
    parser.add_argument("--quiet", action="store_true", help="suppress progress diagnostics")
    if lexicons:
        parser.add_argument("--abbreviations", default=None,
                            help="abbreviation list, one per line")
        parser.add_argument("--syllable-exceptions", dest="syllable_exceptions", default=None,
                            help="syllable override lexicon, word<TAB>count per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textdenoise",
        description="Readability-based text denoising and its evaluation pipeline",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    index_names = [k.value for k in IndexKind]

    p = sub.add_parser("score", help="per-sentence readability scores")
    _add_common(p)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("denoise", help="partition documents into denoised/noise")
    _add_common(p)
    p.add_argument("--index", required=True, choices=index_names)
    p.add_argument("--threshold", type=float, default=0.30)
    p.add_argument("--export-dir", default=None, help="also write <doc_id>.denoised.txt files")
    p.set_defaults(func=_cmd_denoise)

    p = sub.add_parser("sweep", help="partitions across a threshold list")
    _add_common(p)
    p.add_argument("--index", required=True, choices=index_names)
    p.add_argument("--thresholds", required=True, help="comma-separated, e.g. 0.1,0.3,0.5")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("mine", help="rank concept pairs mined from denoised text")
    _add_common(p)
    p.add_argument("--index", default="fi", choices=index_names)
    p.add_argument("--threshold", type=float, default=0.30)
    p.add_argument("--concepts", required=True, help="concept list, one per line")
    p.add_argument("--gold", default=None, help="gold relations, a<TAB>b per line")
    p.add_argument("--rank-by", dest="rank_by", default="ppv", choices=["ppv", "frequency"])
    p.set_defaults(func=_cmd_mine)

    p = sub.add_parser("eval", help="micro/macro P-R-F report from per-item counts")
    _add_common(p, lexicons=False)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("features", help="per-sentence feature vectors as CSV")
    _add_common(p)
    p.add_argument("--stopwords", default=None, help="stopword list (default: bundled)")
    p.add_argument("--entities", default=None, help="entity gazetteer")
    p.add_argument("--verbs", default=None, help="verb gazetteer")
    p.add_argument("--labels", default=None, help="doc_id<TAB>index<TAB>label records")
    p.set_defaults(func=_cmd_features)

    p = sub.add_parser("smote", help="synthetic minority oversampling of a features CSV")
    _add_common(p, lexicons=False)
    p.add_argument("--k", type=int, default=5, help="nearest neighbors to draw from")
    p.add_argument("--multiplier", type=int, default=1, help="synthetic samples per minority sample")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_smote)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
