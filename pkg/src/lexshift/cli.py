"""Command-line pipeline: ingest, stats, compare, freq, topwords, ngrams,
align, shift, kwic.

Outputs are deterministic (no timestamps unless --stamp); usage errors exit
2, data errors exit 1.
"""

import argparse
import datetime
import io
import json
import sys
from pathlib import Path

from . import align as align_mod
from . import corpus as corpus_mod
from . import frequency, ngrams, shift, stats
from .dictionary import Dictionary, load_hierarchy, parse_dic
from .errors import LexshiftError


def _emit(text: str, out_path) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_dictionary(path, hierarchy_path, language) -> Dictionary:
    d = parse_dic(corpus_mod.read_text_file(path), language)
    if hierarchy_path:
        d = load_hierarchy(d, corpus_mod.read_text_file(hierarchy_path))
    return d


def _load_sample(path, label=None) -> stats.Sample:
    records = frequency.load_frequency_csv(path)
    return stats.Sample([r.frequency for r in records],
                        label or Path(path).stem)


def _describe_dict(d: stats.DescriptiveStats) -> dict:
    return {"n": d.n, "mean": round(d.mean, 4), "sd": round(d.sd, 4),
            "median": round(d.median, 4), "iqr": round(d.iqr, 4)}


def _result_dict(r: stats.TestResult) -> dict:
    return {
        "method": r.method,
        "statistic": round(r.statistic, 4),
        "df": None if r.df is None else round(r.df, 4),
        "p_value": round(r.p_value, 4),
        "alpha": r.alpha,
        "significant": r.significant,
    }


def _cmd_ingest(args) -> int:
    corp = corpus_mod.load_corpus(args.manifest, args.language, args.corpus_id)
    cstats = corpus_mod.corpus_stats(corp)
    buf = io.StringIO()
    corpus_mod.write_stats_csv(cstats, buf)
    _emit(buf.getvalue(), args.out)
    print(f"corpus {corp.id}: {cstats.word_tokens} word tokens, "
          f"{cstats.word_types} word types", file=sys.stderr)
    return 0


def _cmd_stats(args) -> int:
    sample = _load_sample(args.input, args.label)
    desc = stats.describe(sample)
    if args.format == "csv":
        text = ("n,mean,sd,median,iqr\n"
                f"{desc.n},{desc.mean:.4f},{desc.sd:.4f},"
                f"{desc.median:.4f},{desc.iqr:.4f}\n")
    else:
        text = json.dumps(_describe_dict(desc), indent=2) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_compare(args) -> int:
    left = _load_sample(args.left)
    right = _load_sample(args.right)
    plan = stats.ComparisonPlan(normality_alpha=args.normality_alpha,
                                variance_alpha=args.variance_alpha,
                                test_alpha=args.alpha)
    if args.method == "auto":
        result = stats.compare_samples(left, right, plan)
    elif args.method == "mannwhitney":
        result = stats.mann_whitney_u(left, right, alpha=args.alpha)
    else:
        result = stats.two_sample_t(left, right, args.method, alpha=args.alpha)
    payload = _result_dict(result)
    payload["descriptives"] = {
        "left": _describe_dict(stats.describe(left)),
        "right": _describe_dict(stats.describe(right)),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_freq(args) -> int:
    corp = corpus_mod.load_corpus(args.manifest, args.language, args.corpus_id)
    dic = _load_dictionary(args.dict, args.hierarchy, args.language)
    records = frequency.category_frequencies(corp, dic)
    buf = io.StringIO()
    frequency.write_frequency_csv(records, dic, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_topwords(args) -> int:
    corp = corpus_mod.load_corpus(args.manifest, args.language, args.corpus_id)
    dic = _load_dictionary(args.dict, args.hierarchy, args.language)
    category = dic.category_by_name(args.category)
    entries = frequency.top_words(corp, dic, category.id, args.k)
    lines = ["rank,word,count"]
    lines += [f"{e.rank},{e.word},{e.count}" for e in entries]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_ngrams(args) -> int:
    corp = corpus_mod.load_corpus(args.manifest, args.language, args.corpus_id)
    spec = ngrams.NGramSpec(n_min=args.n_min, n_max=args.n_max,
                            min_freq=args.min_freq,
                            cross_sentence=args.cross_sentence,
                            case_fold=not args.no_case_fold)
    report = ngrams.extract_ngrams(corp, spec)
    if args.category:
        if not args.dict:
            print("error: --category requires --dict", file=sys.stderr)
            return 2
        dic = _load_dictionary(args.dict, args.hierarchy, args.language)
        category = dic.category_by_name(args.category)
        report = ngrams.filter_by_language_category(report, corp, dic, category.id)
    buf = io.StringIO()
    ngrams.write_ngrams_csv(report, buf)
    _emit(buf.getvalue(), args.out)
    print(f"{report.type_count} types, {report.token_count} tokens",
          file=sys.stderr)
    return 0


def _load_pair(args):
    source = corpus_mod.load_corpus(args.src_manifest, args.src_language,
                                    args.src_corpus_id)
    target = corpus_mod.load_corpus(args.tgt_manifest, args.tgt_language,
                                    args.tgt_corpus_id)
    return source, target


def _cmd_align(args) -> int:
    source, target = _load_pair(args)
    if args.table:
        pc = align_mod.load_alignment(source, target,
                                      corpus_mod.read_text_file(args.table))
    else:
        pc = align_mod.align_corpora(source, target)
    _emit(align_mod.serialize_alignment(pc), args.out)
    kinds: dict[str, int] = {}
    for pair in pc.pairs:
        kinds[pair.kind] = kinds.get(pair.kind, 0) + 1
    histogram = ", ".join(f"{k}={v}" for k, v in sorted(kinds.items()))
    print(f"{len(pc.pairs)} groups: {histogram}", file=sys.stderr)
    return 0


def _cmd_shift(args) -> int:
    source, target = _load_pair(args)
    src_dict = _load_dictionary(args.src_dict, args.src_hierarchy,
                                args.src_language)
    tgt_dict = _load_dictionary(args.tgt_dict, args.tgt_hierarchy,
                                args.tgt_language)
    src_cat = src_dict.category_by_name(args.category)
    tgt_cat = tgt_dict.category_by_name(args.tgt_category or args.category)
    pc = align_mod.load_alignment(source, target,
                                  corpus_mod.read_text_file(args.align))
    spec = ngrams.NGramSpec(n_min=args.n_min, n_max=args.n_max,
                            min_freq=args.min_freq,
                            cross_sentence=args.cross_sentence,
                            case_fold=not args.no_case_fold)
    report = shift.build_shift_report(pc, src_dict, tgt_dict, src_cat.id,
                                      tgt_cat.id, spec,
                                      kwic_width=args.kwic_width)
    if args.format == "json":
        text = shift.render_json(report, pc, src_dict, tgt_dict)
    else:
        text = shift.render_markdown(report, pc, src_dict, tgt_dict)
        if args.stamp:
            text += f"\nGenerated: {datetime.datetime.now().isoformat()}\n"
    _emit(text, args.out)
    return 0


def _cmd_kwic(args) -> int:
    corp = corpus_mod.load_corpus(args.manifest, args.language, args.corpus_id)
    pattern = args.pattern.split()
    lines = shift.kwic(corp, pattern, args.width)
    text = "".join(f"{left}\t{node}\t{right}\n" for left, node, right in lines)
    _emit(text, args.out)
    print(f"{len(lines)} occurrences", file=sys.stderr)
    return 0


def _add_corpus_args(p):
    p.add_argument("--manifest", required=True,
                   help="corpus manifest TSV: document_id<TAB>label<TAB>path")
    p.add_argument("--language", required=True, help="language tag, e.g. en")
    p.add_argument("--corpus-id", default="corpus", help="corpus identifier")


def _add_dict_args(p, required=False):
    p.add_argument("--dict", required=required, help=".dic dictionary path")
    p.add_argument("--hierarchy", help="category hierarchy TSV (child<TAB>parent)")


def _add_pair_args(p):
    p.add_argument("--src-manifest", required=True)
    p.add_argument("--src-language", required=True)
    p.add_argument("--src-corpus-id", default="source")
    p.add_argument("--tgt-manifest", required=True)
    p.add_argument("--tgt-language", required=True)
    p.add_argument("--tgt-corpus-id", default="target")


def _add_ngram_args(p):
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--min-freq", type=int, default=3)
    p.add_argument("--cross-sentence", action="store_true",
                   help="let windows cross sentence boundaries")
    p.add_argument("--no-case-fold", action="store_true",
                   help="treat differently-cased tokens as distinct")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexshift",
        description="Corpus analytics for attitudinal shifts between a text "
                    "and its translation.")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized utilities (reserved)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ingest", help="tokenize a corpus and report token/type counts")
    _add_corpus_args(p)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("stats", help="descriptive statistics of one sample CSV")
    p.add_argument("--input", required=True, help="CSV rows: label,value")
    p.add_argument("--label", help="sample label (default: file stem)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("compare", help="two-sample comparison with test routing")
    p.add_argument("--left", required=True, help="CSV rows: label,value")
    p.add_argument("--right", required=True, help="CSV rows: label,value")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--normality-alpha", type=float, default=0.05)
    p.add_argument("--variance-alpha", type=float, default=0.05)
    p.add_argument("--method", choices=["auto", "student", "welch", "mannwhitney"],
                   default="auto", help="bypass routing with a fixed test")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("freq", help="per-document category frequencies")
    _add_corpus_args(p)
    _add_dict_args(p, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_freq)

    p = sub.add_parser("topwords", help="most frequent words of a category")
    _add_corpus_args(p)
    _add_dict_args(p, required=True)
    p.add_argument("--category", required=True, help="category name")
    p.add_argument("-k", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_topwords)

    p = sub.add_parser("ngrams", help="extract word n-grams above a frequency floor")
    _add_corpus_args(p)
    _add_ngram_args(p)
    _add_dict_args(p)
    p.add_argument("--category", help="keep only n-grams containing this category")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ngrams)

    p = sub.add_parser("align", help="sentence-align two corpora")
    _add_pair_args(p)
    p.add_argument("--table", help="validate and reserialize this alignment TSV "
                                   "instead of aligning automatically")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_align)

    p = sub.add_parser("shift", help="classify category-bearing n-grams across "
                                     "the alignment")
    _add_pair_args(p)
    p.add_argument("--align", required=True, help="alignment TSV")
    p.add_argument("--src-dict", required=True)
    p.add_argument("--src-hierarchy")
    p.add_argument("--tgt-dict", required=True)
    p.add_argument("--tgt-hierarchy")
    p.add_argument("--category", required=True, help="source category name")
    p.add_argument("--tgt-category", help="target category name "
                                          "(default: same as --category)")
    _add_ngram_args(p)
    p.add_argument("--kwic-width", type=int, default=5)
    p.add_argument("--format", choices=["markdown", "json"], default="markdown")
    p.add_argument("--stamp", action="store_true",
                   help="append a generation timestamp (markdown only)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("kwic", help="keyword-in-context concordance")
    _add_corpus_args(p)
    p.add_argument("--pattern", required=True, help="space-separated word sequence")
    p.add_argument("--width", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_kwic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (LexshiftError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
