"""Command-line interface: extract, analyze, report.

Exit codes: 0 success, 1 usage/config error, 2 data error.
"""
from __future__ import annotations

import argparse
import logging
import sys

from clfinfo import __version__
from clfinfo.config import (
    ANALYSES,
    ConfigError,
    build_run_config,
    read_config_file,
)
from clfinfo.conllu import ConlluFormatError
from clfinfo.counts import CountsError
from clfinfo.distributions import DistributionError
from clfinfo.lexicon import LexiconError
from clfinfo.pipeline import run_analyze, run_extract
from clfinfo.projection import ProjectionError
from clfinfo.report import ReportFormatError, load_report, render_report

log = logging.getLogger("clfinfo")

DATA_ERRORS = (
    ConlluFormatError,
    CountsError,
    DistributionError,
    LexiconError,
    ProjectionError,
    ReportFormatError,
    OSError,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this tool reserves 2 for data
    # errors and uses 1 for usage/config.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="key-value config file; flags override it")
    sub.add_argument("--out", dest="output", help="output directory (default .)")
    sub.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")


def _add_rule_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--classifier-deprels", help="comma list (default clf)")
    sub.add_argument("--classifier-xpos", help="comma list (default M)")
    sub.add_argument(
        "--match-policy", choices=("deprel_or_xpos", "deprel_only", "xpos_only")
    )
    sub.add_argument("--noun-upos", help="comma list (default NOUN,PROPN)")
    sub.add_argument("--adjective-deprels", help="comma list (default amod)")
    sub.add_argument("--adjective-upos", help="comma list (default ADJ)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="clfinfo",
        description="Measure how much co-occurring words reduce uncertainty in "
        "Mandarin numeral classifiers (mutual information in bits).",
    )
    parser.add_argument("--version", action="version", version=f"clfinfo {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    extract = commands.add_parser(
        "extract", help="read CoNLL-U files, write pair/triple count TSVs"
    )
    _add_common(extract)
    _add_rule_flags(extract)
    extract.add_argument(
        "corpus", nargs="*", help="CoNLL-U files or globs (also: config key corpus)"
    )
    extract.add_argument("--mode", choices=("strict", "lenient"))

    analyze = commands.add_parser(
        "analyze", help="compute entropies, MI, and bootstrap intervals from counts"
    )
    _add_common(analyze)
    analyze.add_argument("--pairs", help="pairs TSV (default <out>/pairs.tsv)")
    analyze.add_argument("--triples", help="triples TSV (default <out>/triples.tsv)")
    analyze.add_argument(
        "--analyses", help=f"comma list from {','.join(ANALYSES)} (default noun,adjective)"
    )
    analyze.add_argument("--dictionary", help="CC-CEDICT format dictionary")
    analyze.add_argument("--noun-supersenses", help="lemma<TAB>category TSV")
    analyze.add_argument("--adjective-supersenses", help="lemma<TAB>category TSV")
    analyze.add_argument("--synsets", help="lemma<TAB>synset_id TSV")
    analyze.add_argument("--replicates", help="bootstrap replicates (default 1000)")
    analyze.add_argument("--confidence", help="bootstrap confidence (default 0.95)")
    analyze.add_argument("--seed", help="bootstrap seed (default 0)")

    render = commands.add_parser("report", help="render a report JSON as a text table")
    render.add_argument("report_json", help="path to report.json")
    render.add_argument("-v", "--verbose", action="store_true")

    return parser


_FLAG_KEYS = (
    "output",
    "mode",
    "pairs",
    "triples",
    "analyses",
    "dictionary",
    "noun_supersenses",
    "adjective_supersenses",
    "synsets",
    "replicates",
    "confidence",
    "seed",
    "classifier_deprels",
    "classifier_xpos",
    "match_policy",
    "noun_upos",
    "adjective_deprels",
    "adjective_upos",
)


def _merge_config(args: argparse.Namespace):
    values: dict[str, str] = {}
    if getattr(args, "config", None):
        values.update(read_config_file(args.config))
    for key in _FLAG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    corpus = getattr(args, "corpus", None)
    if corpus:
        joined = ",".join(corpus)
        values["corpus"] = (
            values["corpus"] + "," + joined if "corpus" in values else joined
        )
    return build_run_config(values)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "extract":
            cfg = _merge_config(args)
            info = run_extract(cfg)
            log.info(
                "extracted %d pair and %d triple observations from %d sentences "
                "(%d blocks skipped)",
                info["pair_observations"],
                info["triple_observations"],
                info["sentences"],
                info["skipped_blocks"],
            )
        elif args.command == "analyze":
            cfg = _merge_config(args)
            report = run_analyze(cfg)
            log.info("wrote report with %d analyses", len(report["analyses"]))
        elif args.command == "report":
            sys.stdout.write(render_report(load_report(args.report_json)))
    except ConfigError as exc:
        log.error("%s", exc)
        return 1
    except DATA_ERRORS as exc:
        log.error("%s", exc)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
