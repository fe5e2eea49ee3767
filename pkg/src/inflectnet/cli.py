"""Command-line front end.

Subcommands::

    inflectnet analyze   --text T.txt --lexicon L.tsv --out DIR
    inflectnet fit       --text T.txt --lexicon L.tsv --out DIR   (or --coverage CSV)
    inflectnet dictgraph --lexicon L.tsv | --paradigms P --stems S  --out DIR
    inflectnet export    [--text T.txt] --lexicon L.tsv --format dot --out DIR

Every output is CSV (or plain text) with ``\\n`` line endings. Files of a run
are written only after all of them have been computed; if writing fails,
the files already written by the run are removed.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .corpus import Folding, NormalizationConfig, load_text, truncate
from .coverage_stats import (CoverageCurve, coverage_csv, coverage_threshold,
                             normalized_coverage_csv, rank_frequency_csv)
from .errors import DomainError, InflectnetError
from .fitting import (FitConfig, coverage_points, fit_coverage_model, fit_csv, fit_power_law,
                      power_law_csv)
from .inflection_graph import (component_size_histogram, component_subgraph,
                               connected_components, dictionary_graph, export_graph,
                               headword_degree_distribution, build_graph)
from .lexicon import (UnknownPolicy, generate_forms, load_paradigms, load_stems,
                      read_lexicon)
from .pipeline import TextAnalysis, analyze_text

DEFAULT_THRESHOLDS = (0.95, 0.98)
DEFAULT_SEED = 42


class CliError(Exception):
    pass


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def write_outputs(out_dir: Path, files: dict[str, str]) -> list[Path]:
    """Write all ``files`` into ``out_dir``; on failure remove what was written."""
    written: list[Path] = []
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            path = out_dir / name
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            written.append(path)
    except OSError:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return written


def _norm_config(args) -> NormalizationConfig:
    folding = Folding.U_V_AND_I_J if args.fold_uv_ij else Folding.NONE
    return NormalizationConfig(orthography_folding=folding)


def _load_lexicon(args, cfg):
    if args.lexicon:
        return read_lexicon(args.lexicon, cfg)
    if args.paradigms and args.stems:
        with open(args.paradigms, encoding="utf-8") as fh:
            paradigms = load_paradigms(fh)
        with open(args.stems, encoding="utf-8") as fh:
            stems = load_stems(fh)
        return generate_forms(stems, paradigms, cfg)
    raise CliError("need --lexicon, or both --paradigms and --stems")


def _load_texts(args, cfg):
    if not args.text:
        raise CliError("need at least one --text")
    texts = []
    for path in args.text:
        ts = load_text(path, cfg)
        if args.truncate is not None:
            ts = truncate(ts, args.truncate)
        texts.append(ts)
    return texts


def _text_dirs(out: Path, texts) -> list[Path]:
    if len(texts) == 1:
        return [out]
    names = [ts.source_name for ts in texts]
    if len(set(names)) != len(names):
        raise CliError("several --text files share a file name; rename them")
    return [out / n for n in names]


def _stats_line(g, n_components: int) -> str:
    s = g.stats()
    return f"A={s['A']} B={s['B']} E={s['E']} components={n_components}"


def analysis_files(res: TextAnalysis, thresholds) -> dict[str, str]:
    cw, cg = res.word_coverage, res.group_coverage
    report = [
        _stats_line(res.graph, len(res.groups)),
        f"tokens={len(res.tokens)} original_tokens={res.tokens.original_token_count} "
        f"distinct_words={len(res.words)}",
        f"unknown_tokens={res.unknown_tokens} unknown_rate={res.unknown_rate!r} "
        f"skipped_tokens={res.group_counts.skipped}",
    ]
    rows = []
    for p in thresholds:
        for kind, cov in (("words", cw), ("groups", cg)):
            if cov is not None:
                rows.append((repr(float(p)), kind, coverage_threshold(cov, p)))
    empty_cov = "k,coverage\n"
    empty_norm = "x,c\n"
    groups_rows = ((g.group_id, " ".join(sorted(g.headword_members)), " ".join(sorted(g.form_members)),
                    res.group_counts.entries.get(g.group_id, 0)) for g in res.groups)
    return {
        "report.txt": "\n".join(report) + "\n",
        "degree_histogram.csv": _csv(("degree", "count"),
                                     headword_degree_distribution(res.graph).items()),
        "groups.csv": _csv(("group_id", "headwords", "forms", "occurrences"), groups_rows),
        "word_rank_frequency.csv": rank_frequency_csv(res.word_ranks),
        "group_rank_frequency.csv": rank_frequency_csv(res.group_ranks),
        "word_coverage.csv": coverage_csv(cw) if cw else empty_cov,
        "group_coverage.csv": coverage_csv(cg) if cg else empty_cov,
        "word_normalized_coverage.csv": normalized_coverage_csv(cw) if cw else empty_norm,
        "group_normalized_coverage.csv": normalized_coverage_csv(cg) if cg else empty_norm,
        "thresholds.csv": _csv(("p", "kind", "k"), rows),
    }


def cmd_analyze(args) -> int:
    cfg = _norm_config(args)
    lex = _load_lexicon(args, cfg)
    texts = _load_texts(args, cfg)
    policy = UnknownPolicy.parse(args.unknown)
    jobs = []
    for ts, out in zip(texts, _text_dirs(Path(args.out), texts)):
        res = analyze_text(ts, lex, policy)
        jobs.append((out, analysis_files(res, args.thresholds)))
        print(f"{ts.source_name}: {_stats_line(res.graph, len(res.groups))}")
    for out, files in jobs:
        write_outputs(out, files)
    return 0


def read_coverage_csv(path) -> tuple[np.ndarray, bool]:
    """Load ``k,coverage`` or ``x,c`` rows as ``(x, c)`` pairs.

    The flag is True for an ``x,c`` file, i.e. a curve already sampled on
    the normalized axis.
    """
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise CliError(f"{path}: empty file")
    header, body = [h.strip() for h in rows[0]], rows[1:]
    try:
        data = np.array([[float(v) for v in r] for r in body if r], dtype=float)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None
    if header == ["k", "coverage"]:
        if len(data) < 3:
            raise DomainError("degenerate coverage: fewer than two ranked entries")
        return np.column_stack([data[:, 0] / data[-1, 0], data[:, 1]]), False
    if header == ["x", "c"]:
        return data, True
    raise CliError(f"{path}: expected header 'k,coverage' or 'x,c', got {','.join(header)}")


def _fit_points(args) -> np.ndarray:
    """Points to fit.

    A ``k,coverage`` curve (from a file or computed inline) is sampled at
    ``--points`` evenly spaced x; an ``x,c`` file is fitted as given.
    """
    if args.coverage:
        pts, normalized = read_coverage_csv(args.coverage)
        if normalized:
            return pts
    else:
        cfg = _norm_config(args)
        lex = _load_lexicon(args, cfg)
        texts = _load_texts(args, cfg)
        if len(texts) != 1:
            raise CliError("fit takes a single --text")
        res = analyze_text(texts[0], lex, UnknownPolicy.parse(args.unknown))
        cov: CoverageCurve | None = res.group_coverage if args.kind == "groups" else res.word_coverage
        if cov is None or cov.L < 2:
            raise DomainError(f"degenerate coverage: {cov.L if cov else 0} ranked {args.kind}")
        return coverage_points(cov, args.points)
    if len(pts) < 3:
        raise DomainError("degenerate coverage curve")
    xs = np.linspace(0.0, 1.0, args.points)
    return np.column_stack([xs, np.interp(xs, pts[:, 0], pts[:, 1])])


def cmd_fit(args) -> int:
    points = _fit_points(args)
    four = fit_coverage_model(points, FitConfig(seed=args.seed))
    two = fit_coverage_model(points, FitConfig(seed=args.seed, model="two"))
    write_outputs(Path(args.out), {"fit.csv": fit_csv(four), "fit_two_param.csv": fit_csv(two)})
    p = four.params
    print(f"alpha={p.alpha:.4f} beta={p.beta:.4f} gamma={p.gamma_fit:.4f} "
          f"delta={p.delta:.4f} eta={four.eta:.4f} sse={four.sse:.3g}")
    return 0


def cmd_dictgraph(args) -> int:
    cfg = _norm_config(args)
    lex = _load_lexicon(args, cfg)
    g = dictionary_graph(lex)
    groups = connected_components(g)
    hist = component_size_histogram(groups)
    report = [_stats_line(g, len(groups)),
              f"headwords={lex.headword_count} forms={lex.form_count}"]
    try:
        pl = fit_power_law(hist, args.exclude_largest)
        report.append(f"tau={pl.tau!r} intercept={pl.intercept!r} points_used={pl.points_used} "
                      f"excluded_sizes={pl.excluded_sizes}")
    except DomainError as exc:
        pl = None
        report.append(f"tau=NA ({exc})")
    files = {
        "report.txt": "\n".join(report) + "\n",
        "size_histogram.csv": _csv(("m", "count"), hist.counts.items()),
        "degree_histogram.csv": _csv(("degree", "count"), headword_degree_distribution(g).items()),
        "powerlaw.csv": power_law_csv(pl),
    }
    if groups:
        sub = component_subgraph(g, groups[0])
        ext = "dot" if args.format == "dot" else "tsv"
        files[f"largest_component.{ext}"] = export_graph(sub, args.format).decode("utf-8")
    write_outputs(Path(args.out), files)
    print("\n".join(report))
    return 0


def cmd_export(args) -> int:
    cfg = _norm_config(args)
    lex = _load_lexicon(args, cfg)
    if args.text:
        texts = _load_texts(args, cfg)
        words = set().union(*(ts.distinct() for ts in texts))
        g = build_graph(words, lex, UnknownPolicy.parse(args.unknown))
    else:
        g = dictionary_graph(lex)
    data = export_graph(g, args.format)
    if args.out:
        name = "graph.dot" if args.format == "dot" else "graph.tsv"
        write_outputs(Path(args.out), {name: data.decode("utf-8")})
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0


def _thresholds(value: str) -> tuple[float, ...]:
    try:
        out = tuple(float(v) for v in value.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {value!r}")
    if not out or any(not 0 < p <= 1 for p in out):
        raise argparse.ArgumentTypeError("coverage levels must lie in (0, 1]")
    return out


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="append", metavar="PATH", help="UTF-8 text (repeatable)")
    common.add_argument("--lexicon", metavar="PATH", help="form<TAB>headword[,headword] file")
    common.add_argument("--paradigms", metavar="PATH", help="paradigm endings file")
    common.add_argument("--stems", metavar="PATH", help="headword<TAB>stem<TAB>paradigm file")
    common.add_argument("--truncate", type=_nonneg, metavar="N",
                        help="keep only the first N tokens of each text")
    common.add_argument("--fold-uv-ij", action="store_true", help="fold v->u and j->i")
    common.add_argument("--unknown", choices=("self", "drop"), default="self",
                        help="unknown words become their own headword (self) or are dropped")
    common.add_argument("--out", metavar="DIR", help="output directory")

    parser = argparse.ArgumentParser(
        prog="inflectnet",
        description="Inflection graphs, word groups and coverage curves of inflected texts.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="graph, groups and coverage of a text")
    p.add_argument("--thresholds", type=_thresholds, default=DEFAULT_THRESHOLDS, metavar="LIST",
                   help="coverage levels for the threshold table (default 0.95,0.98)")
    p.set_defaults(func=cmd_analyze, need_out=True)

    p = sub.add_parser("fit", parents=[common], help="fit the coverage model")
    p.add_argument("--coverage", metavar="PATH", help="k,coverage or x,c CSV from a previous analyze")
    p.add_argument("--kind", choices=("groups", "words"), default="groups")
    p.add_argument("--points", type=int, default=500, help="sample size on [0, 1] (default 500)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"seed for the multi-start perturbations (default {DEFAULT_SEED})")
    p.set_defaults(func=cmd_fit, need_out=True)

    p = sub.add_parser("dictgraph", parents=[common], help="dictionary-wide graph statistics")
    p.add_argument("--exclude-largest", type=_nonneg, default=5, metavar="N",
                   help="largest component sizes left out of the power-law fit (default 5)")
    p.add_argument("--format", choices=("edge_list", "dot"), default="edge_list")
    p.set_defaults(func=cmd_dictgraph, need_out=True)

    p = sub.add_parser("export", parents=[common], help="write the graph as an edge list or DOT")
    p.add_argument("--format", choices=("edge_list", "dot"), default="edge_list")
    p.set_defaults(func=cmd_export, need_out=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.need_out and not args.out:
        parser.error(f"{args.command} requires --out DIR")
    try:
        return args.func(args)
    except (CliError, InflectnetError, OSError) as exc:
        print(f"inflectnet {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
