"""Command line interface.

Commands:
  score         score one manifest; writes profiles.csv, profiles.json,
                histogram.csv
  compare       two-corpus comparison of mean EI and adjective rate
  classify      cross-validated classification over a two-label manifest
  lexicon-info  lexicon size and tail summary
  replicate     score + compare + classify over the bundled fixture corpora

Exit codes: 0 success, 2 input or validation error, 3 degenerate
statistics, 4 unimplemented feature. Outputs land only under --out, and
nothing is written when a command fails.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import classify as clf
from . import corpus as corpus_mod
from . import resources
from .errors import (
    AffectixError,
    ArgumentError,
    ClassifierNotImplementedError,
    DegenerateTestError,
)
from .intensity import load_adjective_lexicon
from .lexicon import build_emotion_list, load_lexicon
from .stats import two_sample_ttest
from .textproc import DEFAULT_ABBREVIATIONS, load_abbreviations

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_UNIMPLEMENTED = 4

DEFAULT_SEED = 42
SEED_ENV_VAR = "AFFECTIX_SEED"
HISTOGRAM_BINS = 30

_FEATURE_FLAGS = {"mean": "mean_only", "mean_std": "mean_and_std"}


@dataclass
class RunConfig:
    lexicon_path: Path
    output_dir: Path
    lower_frac: float = 0.2
    upper_frac: float = 0.2
    std_mode: str = "population"
    k_folds: int = 10
    seed: int = DEFAULT_SEED
    feature_mode: str = "mean_only"
    ttest_kind: str = "welch"
    abbrev_path: Path | None = None
    adjectives_path: Path | None = None
    suffix_rules_path: Path | None = None
    classifiers: tuple[str, ...] | None = None


def _scoring_env(config: RunConfig):
    lex = load_lexicon(config.lexicon_path)
    words = build_emotion_list(lex, config.lower_frac, config.upper_frac)
    adjectives = load_adjective_lexicon(
        config.adjectives_path or resources.default_adjectives_path(),
        config.suffix_rules_path or resources.default_suffix_rules_path(),
    )
    abbrevs = (
        load_abbreviations(config.abbrev_path)
        if config.abbrev_path
        else DEFAULT_ABBREVIATIONS
    )
    return words, adjectives, abbrevs


def _run_manifest(config: RunConfig, manifest_path) -> corpus_mod.CorpusRun:
    manifest = corpus_mod.load_manifest(manifest_path)
    words, adjectives, abbrevs = _scoring_env(config)
    return corpus_mod.run_corpus(
        manifest, words, adjectives, std_mode=config.std_mode, abbreviations=abbrevs
    )


def _csv_file(rows: list[tuple]) -> Callable[[Path], None]:
    def write(path: Path) -> None:
        with path.open("w", encoding="utf-8", newline="") as fh:
            csv.writer(fh).writerows(rows)

    return write


def _json_file(payload: dict) -> Callable[[Path], None]:
    def write(path: Path) -> None:
        with path.open("w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")

    return write


def _write_outputs(output_dir: Path, files: dict[str, Callable[[Path], None]]) -> None:
    """Write every file or none; partial output is removed on failure."""
    output_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        for name, write in files.items():
            target = output_dir / name
            write(target)
            written.append(target)
    except BaseException:
        for target in written:
            target.unlink(missing_ok=True)
        raise


def _label_order(run: corpus_mod.CorpusRun) -> list[str]:
    seen: list[str] = []
    for p in run.profiles:
        label = run.labels[p.doc_id]
        if label not in seen:
            seen.append(label)
    return seen


def _histogram_rows(run: corpus_mod.CorpusRun) -> list[tuple]:
    """Equal-width bins of mean_ei over [0, max], counted per label."""
    labels = _label_order(run)
    top = max(p.mean_ei for p in run.profiles)
    width = top / HISTOGRAM_BINS if top > 0 else 1.0 / HISTOGRAM_BINS
    counts = {label: [0] * HISTOGRAM_BINS for label in labels}
    for p in run.profiles:
        idx = min(int(p.mean_ei / width), HISTOGRAM_BINS - 1)
        counts[run.labels[p.doc_id]][idx] += 1
    rows: list[tuple] = [("bin_lo", "bin_hi", *labels)]
    for i in range(HISTOGRAM_BINS):
        rows.append((i * width, (i + 1) * width, *(counts[lb][i] for lb in labels)))
    return rows


def cmd_score(config: RunConfig, manifest_path) -> int:
    run = _run_manifest(config, manifest_path)
    _write_outputs(
        config.output_dir,
        {
            "profiles.csv": _csv_file(corpus_mod.run_to_csv_rows(run)),
            "profiles.json": _json_file(corpus_mod.run_to_json_dict(run)),
            "histogram.csv": _csv_file(_histogram_rows(run)),
        },
    )
    print(f"scored {len(run.profiles)} documents, skipped {len(run.skipped)}")
    for label in _label_order(run):
        s = run.group_summaries[label]
        print(f"  {label}: mean EI {s.mean:.4f} +/- {s.sd:.4f} (n={s.n})")
    return EXIT_OK


def _group_block(name, summary_a, summary_b, test) -> dict:
    return {
        "measure": name,
        "group_a": {"n": summary_a.n, "mean": summary_a.mean, "sd": summary_a.sd},
        "group_b": {"n": summary_b.n, "mean": summary_b.mean, "sd": summary_b.sd},
        "ttest": {
            "kind": test.kind,
            "t": test.t,
            "df": test.df,
            "p_two_sided": test.p_two_sided,
        },
    }


def cmd_compare(config: RunConfig, manifest_a, manifest_b) -> int:
    run_a = _run_manifest(config, manifest_a)
    run_b = _run_manifest(config, manifest_b)

    blocks = []
    from .stats import summarize

    for name, pick in (
        ("mean_ei", lambda run: [p.mean_ei for p in run.profiles]),
        ("adjective_rate", lambda run: list(run.adjective_rates.values())),
    ):
        values_a = pick(run_a)
        values_b = pick(run_b)
        test = two_sample_ttest(values_a, values_b, kind=config.ttest_kind)
        blocks.append(_group_block(name, summarize(values_a), summarize(values_b), test))

    payload = {
        "manifest_a": str(manifest_a),
        "manifest_b": str(manifest_b),
        "comparisons": blocks,
    }
    _write_outputs(config.output_dir, {"compare.json": _json_file(payload)})
    for block in blocks:
        a, b, w = block["group_a"], block["group_b"], block["ttest"]
        print(
            f"{block['measure']}: a {a['mean']:.4f} +/- {a['sd']:.4f} (n={a['n']})"
            f" vs b {b['mean']:.4f} +/- {b['sd']:.4f} (n={b['n']})"
            f" | {w['kind']} t={w['t']:.4f} df={w['df']:.2f} p={w['p_two_sided']:.3g}"
        )
    return EXIT_OK


def cmd_classify(config: RunConfig, manifest_path) -> int:
    run = _run_manifest(config, manifest_path)
    label_names = sorted({run.labels[p.doc_id] for p in run.profiles})
    if len(label_names) != 2:
        raise ArgumentError(
            f"classification needs exactly 2 labels, got {label_names}"
        )
    label_map = {name: i for i, name in enumerate(label_names)}
    for name in label_names:
        count = sum(1 for p in run.profiles if run.labels[p.doc_id] == name)
        if count < config.k_folds:
            raise ArgumentError(
                f"label {name!r} has {count} scored documents, "
                f"need at least k={config.k_folds}"
            )
    ds = clf.features_from_profiles(
        run.profiles,
        {p.doc_id: label_map[run.labels[p.doc_id]] for p in run.profiles},
        mode=config.feature_mode,
        class_names=(label_names[0], label_names[1]),
    )
    ids = config.classifiers or clf.IMPLEMENTED_CLASSIFIERS
    reports = [clf.cross_validate(cid, ds, config.k_folds, config.seed) for cid in ids]

    table_rows: list[tuple] = [clf.TABLE_COLUMNS]
    table_rows.extend(report.csv_row() for report in reports)
    payload = {
        "seed": config.seed,
        "k": config.k_folds,
        "feature_mode": config.feature_mode,
        "class_names": list(label_names),
        "classifiers": [report.to_json_dict() for report in reports],
    }
    _write_outputs(
        config.output_dir,
        {"table1.csv": _csv_file(table_rows), "report.json": _json_file(payload)},
    )
    for report in reports:
        print(
            f"{report.classifier_id}: accuracy {report.accuracy[0]:.4f} "
            f"+/- {report.accuracy[1]:.4f}, auc {report.roc_auc[0]:.4f}, "
            f"f1 {report.f1[0]:.4f}"
        )
    return EXIT_OK


def cmd_lexicon_info(config: RunConfig) -> int:
    lex = load_lexicon(config.lexicon_path)
    words = build_emotion_list(lex, config.lower_frac, config.upper_frac)
    print(f"lexicon {lex.source_id}: {len(lex)} entries", end="")
    if lex.duplicate_count:
        print(f" ({lex.duplicate_count} duplicates ignored)", end="")
    print()
    print(f"negative tail ({words.lower_frac:g}): {len(words.negative)} words")
    print(f"  sample: {', '.join(sorted(words.negative)[:10])}")
    print(f"positive tail ({words.upper_frac:g}): {len(words.positive)} words")
    print(f"  sample: {', '.join(sorted(words.positive)[:10])}")
    return EXIT_OK


def cmd_replicate(config: RunConfig) -> int:
    """Fixture walkthrough: score both corpora, compare them, classify."""
    base = config.output_dir
    high = resources.fixture_manifest_path("high")
    neutral = resources.fixture_manifest_path("neutral")
    combined = resources.fixture_manifest_path("all")

    print("== score: high-affect fixture corpus ==")
    cmd_score(dataclasses.replace(config, output_dir=base / "score_high"), high)
    print("== score: neutral fixture corpus ==")
    cmd_score(dataclasses.replace(config, output_dir=base / "score_neutral"), neutral)
    print("== compare: high vs neutral ==")
    cmd_compare(dataclasses.replace(config, output_dir=base / "compare"), high, neutral)
    print("== classify: combined fixture corpus ==")
    cmd_classify(dataclasses.replace(config, output_dir=base / "classify"), combined)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--lexicon",
        type=Path,
        default=None,
        help="affect lexicon file (default: bundled 50-word fixture)",
    )
    common.add_argument("--lower-frac", type=float, default=0.2)
    common.add_argument("--upper-frac", type=float, default=0.2)
    common.add_argument(
        "--std-mode", choices=("population", "sample"), default="population"
    )
    common.add_argument("--k", type=int, default=10, help="cross-validation folds")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"RNG seed (default {DEFAULT_SEED}; ${SEED_ENV_VAR} overrides "
        "the default when the flag is absent)",
    )
    common.add_argument(
        "--features", choices=tuple(_FEATURE_FLAGS), default="mean"
    )
    common.add_argument(
        "--ttest",
        choices=("welch", "pooled"),
        default="welch",
        help="two-sample test variant used by compare",
    )
    common.add_argument("--out", type=Path, default=Path("affectix_out"))
    common.add_argument("--abbrev", type=Path, default=None)
    common.add_argument("--adjectives", type=Path, default=None)
    common.add_argument("--suffixes", type=Path, default=None)
    common.add_argument(
        "--classifier",
        action="append",
        default=None,
        metavar="ID",
        help="classifier id to run (repeatable; default: all implemented)",
    )

    parser = argparse.ArgumentParser(
        prog="affectix",
        description="Emotion intensity scoring, corpus comparison and "
        "subject classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", parents=[common], help="score one corpus manifest")
    p.add_argument("manifest", type=Path)
    p = sub.add_parser("compare", parents=[common], help="compare two corpora")
    p.add_argument("manifest_a", type=Path)
    p.add_argument("manifest_b", type=Path)
    p = sub.add_parser(
        "classify", parents=[common], help="cross-validated classification"
    )
    p.add_argument("manifest", type=Path)
    sub.add_parser("lexicon-info", parents=[common], help="lexicon summary")
    sub.add_parser(
        "replicate", parents=[common], help="fixture score/compare/classify chain"
    )
    return parser


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV_VAR)
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise ArgumentError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        lexicon_path=args.lexicon or resources.default_lexicon_path(),
        output_dir=args.out,
        lower_frac=args.lower_frac,
        upper_frac=args.upper_frac,
        std_mode=args.std_mode,
        k_folds=args.k,
        seed=_resolve_seed(args.seed),
        feature_mode=_FEATURE_FLAGS[args.features],
        ttest_kind=args.ttest,
        abbrev_path=args.abbrev,
        adjectives_path=args.adjectives,
        suffix_rules_path=args.suffixes,
        classifiers=tuple(args.classifier) if args.classifier else None,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "score":
            return cmd_score(config, args.manifest)
        if args.command == "compare":
            return cmd_compare(config, args.manifest_a, args.manifest_b)
        if args.command == "classify":
            return cmd_classify(config, args.manifest)
        if args.command == "lexicon-info":
            return cmd_lexicon_info(config)
        if args.command == "replicate":
            return cmd_replicate(config)
        raise ArgumentError(f"unknown command {args.command!r}")
    except ClassifierNotImplementedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNIMPLEMENTED
    except DegenerateTestError as exc:
        print(f"degenerate statistics: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (AffectixError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
