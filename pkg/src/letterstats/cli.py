"""Command-line interface.

Subcommands:

    analyze   per-document and per-category frequency tables from a manifest
    standard  build and save a category standard file
    rank      ranked + cumulative table for a saved standard
    classify  distance matrix and predictions for test docs vs. standards
    reduce    least-common or random passage reduction
    stats     significance tests over a distance matrix

Exit status: 0 success, 1 usage error, 2 data error.  Machine-readable
outputs are deterministic: running a subcommand twice on identical inputs
(and seeds) produces byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classifier, corpus, reducer, standards, stats
from .errors import LetterStatsError
from .histogram import ALPHABET, count_letters, to_frequency


class _UsageError(Exception):
    def __init__(self, message: str, synopsis: str):
        super().__init__(message)
        self.synopsis = synopsis


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems instead of exiting itself."""

    def error(self, message):
        raise _UsageError(message, self.format_usage().rstrip())


def _fmt(x: float) -> str:
    return repr(float(x))


def _write_tsv(path: Path, header: list[str], rows: list[list[str]]) -> None:
    lines = ["\t".join(header)]
    lines += ["\t".join(row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _read_text(path) -> str:
    return Path(path).read_bytes().decode("utf-8", errors="replace")


def _load_corpus_frequencies(manifest_path):
    manifest = corpus.load_manifest(manifest_path)
    docs = corpus.load_corpus(manifest)
    return manifest, docs


def _category_histograms(manifest, docs):
    by_category = {}
    for doc in docs:
        by_category.setdefault(doc.category, []).append(count_letters(doc.text))
    return {cat: by_category[cat] for cat in manifest.categories if cat in by_category}


# --- subcommand implementations ------------------------------------------


def _cmd_analyze(args) -> int:
    manifest, docs = _load_corpus_frequencies(args.manifest)
    grouped = _category_histograms(manifest, docs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    built = {
        cat: standards.build_standard(cat, hists, "pooled")
        for cat, hists in grouped.items()
    }

    header = ["category"] + list(ALPHABET)
    _write_tsv(
        out / "categories.tsv",
        header,
        [
            [cat] + [_fmt(std.mean_freq.percent_of(ch)) for ch in ALPHABET]
            for cat, std in built.items()
        ],
    )
    _write_tsv(
        out / "dispersion.tsv",
        header,
        [
            [cat] + [_fmt(sd) for sd in std.dispersion]
            for cat, std in built.items()
        ],
    )
    for cat, std in built.items():
        rows = [
            [str(r), letter, _fmt(pct), _fmt(sd), _fmt(cum)]
            for r, letter, pct, sd, cum in standards.emit_distribution_report(std)
        ]
        _write_tsv(
            out / f"distribution_{cat}.tsv",
            ["rank", "letter", "percent", "sd", "cumulative"],
            rows,
        )

    if args.per_doc:
        rows = []
        for doc in docs:
            freq = to_frequency(count_letters(doc.text))
            rows.append(
                [doc.doc_id, doc.category]
                + [_fmt(freq.percent_of(ch)) for ch in ALPHABET]
            )
        _write_tsv(out / "per_doc.tsv", ["doc_id", "category"] + list(ALPHABET), rows)

    print(f"analyzed {len(docs)} documents in {len(built)} categories -> {out}")
    return 0


def _cmd_standard_build(args) -> int:
    manifest, docs = _load_corpus_frequencies(args.manifest)
    hists = [count_letters(d.text) for d in docs if d.category == args.category]
    std = standards.build_standard(args.category, hists, args.mode)
    standards.write_standard(std, args.out)
    print(f"standard {args.category!r} ({std.mode}, n={std.n_docs}) -> {args.out}")
    return 0


def _cmd_rank(args) -> int:
    std = standards.read_standard(args.standard)
    rows = [
        [str(r), letter, _fmt(pct), _fmt(cum)]
        for r, letter, pct, _sd, cum in standards.emit_distribution_report(std)
    ]
    _write_tsv(Path(args.out), ["rank", "letter", "percent", "cumulative"], rows)
    print(f"ranked distribution for {std.category!r} -> {args.out}")
    return 0


def _cmd_classify(args) -> int:
    std_dir = Path(args.standards)
    std_files = sorted(std_dir.glob("*.std"))
    if not std_files:
        raise LetterStatsError(f"no .std files found in {std_dir}")
    stds = [standards.read_standard(p) for p in std_files]

    manifest, docs = _load_corpus_frequencies(args.manifest)
    vectors = [(d.doc_id, to_frequency(count_letters(d.text))) for d in docs]
    result = classifier.classify_batch(vectors, stds)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    header = ["standard"] + list(result.doc_ids)
    _write_tsv(
        out / "distance_matrix.tsv",
        header,
        [
            [cat] + [f"{d:.2f}" for d in row]
            for cat, row in zip(result.categories, result.matrix)
        ],
    )
    _write_tsv(
        out / "distance_matrix_full.tsv",
        header,
        [
            [cat] + [_fmt(d) for d in row]
            for cat, row in zip(result.categories, result.matrix)
        ],
    )
    _write_tsv(
        out / "predictions.tsv",
        ["doc_id", "predicted", "distance", "ties"],
        [
            [
                rep.doc_id,
                rep.predicted,
                _fmt(min(d for _, d in rep.per_standard)),
                ",".join(rep.tied),
            ]
            for rep in result.reports
        ],
    )
    _write_tsv(
        out / "row_stats.tsv",
        ["standard", "mean", "sd"],
        [
            [cat, _fmt(mean), _fmt(sd)]
            for cat, mean, sd in zip(result.categories, result.row_mean, result.row_std)
        ],
    )
    print(f"classified {len(result.doc_ids)} documents against {len(stds)} standards -> {out}")
    return 0


def _cmd_reduce(args) -> int:
    text = _read_text(args.input)
    if args.mode == "least-common":
        if args.standard is None or args.retain is None:
            raise _UsageError(
                "least-common mode requires --standard and --retain",
                "usage: letterstats reduce --mode least-common --standard FILE "
                "--retain PCT INPUT --out FILE",
            )
        std = standards.read_standard(args.standard)
        removal = standards.derive_removal_set(std, args.retain)
        passage = reducer.reduce_least_common(text, removal)
        extra = (
            f"removed letters: {''.join(sorted(removal.letters))}\n"
            f"retained cumulative: {removal.retained_cumulative:.2f}\n"
        )
    else:
        if args.fraction is None or args.seed is None:
            raise _UsageError(
                "random mode requires --fraction and --seed",
                "usage: letterstats reduce --mode random --fraction F --seed N "
                "INPUT --out FILE",
            )
        passage = reducer.reduce_random(text, args.fraction, args.seed)
        extra = f"seed: {args.seed}\n"

    Path(args.out).write_text(passage.text, encoding="utf-8", newline="\n")
    summary = reducer.reduction_summary(passage)
    sys.stdout.write(
        f"mode: {args.mode}\n"
        + extra
        + f"letters erased: {summary.erased_count} of {summary.original_letter_count} "
        f"({100.0 * summary.erased_fraction:.1f}%)\n"
        f"output: {args.out}\n"
    )
    return 0


def _cmd_stats_kw(args) -> int:
    groups = []
    with open(args.matrix, "r", encoding="utf-8") as fh:
        header = fh.readline()
        if not header.strip():
            raise LetterStatsError(f"{args.matrix}: empty matrix file")
        for line in fh:
            if not line.strip():
                continue
            fields = line.rstrip("\n").split("\t")
            try:
                groups.append((fields[0], [float(v) for v in fields[1:]]))
            except ValueError:
                raise LetterStatsError(
                    f"{args.matrix}: non-numeric distance for group {fields[0]!r}"
                ) from None
    if len(groups) < 2:
        raise LetterStatsError(f"{args.matrix}: need at least 2 group rows")

    omnibus = stats.kruskal_wallis(groups)
    pairs = stats.dunn_pairwise(groups)

    def star(p: float) -> str:
        if p < 0.01:
            return "**"
        if p < 0.05:
            return "*"
        return "ns"

    lines = [
        f"# kruskal_wallis H = {_fmt(omnibus.H)}",
        f"# df = {omnibus.df}",
        f"# p = {_fmt(omnibus.p)}",
        f"# degenerate = {'yes' if omnibus.degenerate else 'no'}",
        "\t".join(["group_a", "group_b", "z", "p_raw", "p_adjusted", "significance"]),
    ]
    for cmp in pairs:
        lines.append(
            "\t".join(
                [
                    cmp.pair[0],
                    cmp.pair[1],
                    _fmt(cmp.z),
                    _fmt(cmp.p_raw),
                    _fmt(cmp.p_adjusted),
                    star(cmp.p_adjusted),
                ]
            )
        )
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(
        f"H = {omnibus.H:.4f}, df = {omnibus.df}, p = {omnibus.p:.4g}; "
        f"{len(pairs)} pairwise comparisons -> {args.out}"
    )
    return 0


# --- argument wiring ------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="letterstats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("analyze", help="frequency tables from a manifest corpus")
    p.add_argument("--manifest", required=True)
    p.add_argument("--per-doc", action="store_true", dest="per_doc")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_analyze)

    p_std = sub.add_parser("standard", help="category standard operations")
    std_sub = p_std.add_subparsers(dest="standard_command", required=True)
    p = std_sub.add_parser("build", help="build a standard from one manifest category")
    p.add_argument("--manifest", required=True)
    p.add_argument("--category", required=True)
    p.add_argument("--mode", choices=standards.AGGREGATION_MODES, default="pooled")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_standard_build)

    p = sub.add_parser("rank", help="ranked + cumulative table for a standard")
    p.add_argument("--standard", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("classify", help="distance matrix and predictions")
    p.add_argument("--standards", required=True, help="directory of .std files")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("reduce", help="reduce a passage")
    p.add_argument("--mode", choices=("least-common", "random"), required=True)
    p.add_argument("--standard")
    p.add_argument("--retain", type=float)
    p.add_argument("--fraction", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("input", metavar="INPUT")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reduce)

    p_stats = sub.add_parser("stats", help="significance tests")
    stats_sub = p_stats.add_subparsers(dest="stats_command", required=True)
    p = stats_sub.add_parser("kw", help="Kruskal-Wallis + pairwise table from a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_stats_kw)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(exc.synopsis, file=sys.stderr)
        return 1
    except (LetterStatsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
