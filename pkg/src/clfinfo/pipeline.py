"""End-to-end orchestration: corpus -> counts -> analysis report.

`run_extract` streams CoNLL-U files into pair/triple count TSVs.
`run_analyze` loads counts plus lexicon inputs, builds every requested
analysis joint, attaches bootstrap intervals, and emits the JSON report
and per-figure CSVs. Fixed inputs and a fixed seed produce byte-identical
outputs.
"""
from __future__ import annotations

import json
import logging
import os
from typing import Callable, Mapping

from clfinfo import __version__
from clfinfo.bootstrap import BootstrapConfig, bootstrap_mi
from clfinfo.config import (
    NEEDS_DICTIONARY,
    NEEDS_PAIRS,
    NEEDS_TRIPLES,
    RunConfig,
    validate_for_analyze,
    validate_for_extract,
)
from clfinfo.conllu import IngestStats, read_conllu_file
from clfinfo.counts import (
    PairCount,
    TripleCount,
    accumulate_pairs,
    accumulate_triples,
    marginalize_triples,
    normalize,
    read_counts_file,
    write_counts_file,
)
from clfinfo.extraction import extract_pairs, extract_triples
from clfinfo.infotheory import conditional_entropy, entropy, mutual_information
from clfinfo.lexicon import (
    LexiconStats,
    load_dictionary_file,
    load_supersenses_file,
    load_synsets_file,
    map_to_supersenses,
    map_to_synsets,
)
from clfinfo.projection import (
    AnalysisJoint,
    build_ca,
    build_ca_restricted,
    build_cn,
    build_cn_restricted,
    build_cs,
    expand_synsets,
    split_pairs_by_synset_coverage,
)

log = logging.getLogger(__name__)

REPORT_SCHEMA = "clfinfo-report/1"
IDENTITY_TOL = 1e-9

FIGURE_COLUMNS = ("category", "H_C", "I", "H_C_given", "ci_lo", "ci_hi")


class ReportIntegrityError(RuntimeError):
    """An emitted record failed the H(C) - H(C|X) = I(C;X) identity."""


def run_extract(cfg: RunConfig) -> dict:
    """Extract tuples from the configured corpus and write counts TSVs.

    Returns the extraction statistics that were also written to
    extract_stats.json.
    """
    validate_for_extract(cfg)
    os.makedirs(cfg.output, exist_ok=True)
    stats = IngestStats()
    pair_obs = []
    triple_obs = []
    for path in cfg.corpus_files():
        for sentence in read_conllu_file(path, mode=cfg.mode, stats=stats):
            pair_obs.extend(extract_pairs(sentence, cfg.rules))
            triple_obs.extend(extract_triples(sentence, cfg.rules))
    pairs = accumulate_pairs(pair_obs)
    triples = accumulate_triples(triple_obs)
    write_counts_file(pairs, cfg.pairs_path())
    write_counts_file(triples, cfg.triples_path())
    info = {
        "files": stats.files,
        "sentences": stats.sentences,
        "skipped_blocks": stats.skipped_blocks,
        "pair_observations": pairs.total,
        "distinct_pairs": len(pairs.entries),
        "triple_observations": triples.total,
        "distinct_triples": len(triples.entries),
    }
    stats_path = os.path.join(cfg.output, "extract_stats.json")
    _write_json(info, stats_path)
    if pairs.total == 0:
        log.warning("no classifier-noun pairs were extracted")
    return info


def _interval_record(interval) -> dict:
    return {
        "point": interval.point,
        "lower": interval.lower,
        "upper": interval.upper,
        "replicates_used": interval.replicates_used,
    }


def _analysis_record(aj: AnalysisJoint, interval) -> dict:
    h_c = entropy(aj.joint.row_marginal())
    h_c_given = conditional_entropy(aj.joint, given="cols")
    i_cx = mutual_information(aj.joint)
    rows, cols = aj.support_size
    return {
        "H_C": h_c,
        "H_C_given_X": h_c_given,
        "I_C_X": i_cx,
        "interval": _interval_record(interval),
        "support": {"classifiers": rows, "x_values": cols},
        "observations": aj.observation_total,
        "dropped_observations": aj.dropped_observations,
        "dropped_mass": aj.dropped_mass,
    }


def _pair_builder() -> Callable:
    return lambda resampled: normalize(PairCount(entries=dict(resampled)))


def _triple_builder() -> Callable:
    return lambda resampled: normalize(
        marginalize_triples(TripleCount(entries=dict(resampled)))
    )


def _category_records(
    joints: list[AnalysisJoint],
    observations: list[Mapping],
    builders: list[Callable],
    names: list[str],
    boot: BootstrapConfig,
) -> list[dict]:
    records = []
    for aj, obs, build, name in zip(joints, observations, builders, names):
        interval = bootstrap_mi(obs, build, boot)
        record = _analysis_record(aj, interval)
        record["category"] = name
        records.append(record)
    records.sort(key=lambda r: (-r["I_C_X"], r["category"]))
    return records


def run_analyze(cfg: RunConfig) -> dict:
    """Build every requested analysis and write report.json plus the
    per-figure CSVs into the output directory."""
    validate_for_analyze(cfg)
    os.makedirs(cfg.output, exist_ok=True)
    boot = cfg.bootstrap

    pairs = triples = None
    if any(a in NEEDS_PAIRS for a in cfg.analyses):
        pairs = read_counts_file(cfg.pairs_path())
    if any(a in NEEDS_TRIPLES for a in cfg.analyses):
        triples = read_counts_file(cfg.triples_path())

    lexstats = LexiconStats()
    gloss_map = None
    if any(a in NEEDS_DICTIONARY for a in cfg.analyses):
        gloss_map = load_dictionary_file(cfg.dictionary, stats=lexstats)

    analyses: dict[str, dict] = {}

    if "noun" in cfg.analyses:
        aj = build_cn(pairs)
        interval = bootstrap_mi(pairs.entries, _pair_builder(), boot)
        analyses["noun"] = {"x": "noun", **_analysis_record(aj, interval)}

    if "adjective" in cfg.analyses:
        aj = build_ca(triples)
        interval = bootstrap_mi(triples.entries, _triple_builder(), boot)
        analyses["adjective"] = {"x": "adjective", **_analysis_record(aj, interval)}

    if "noun_supersense" in cfg.analyses:
        inventory = load_supersenses_file(
            cfg.noun_supersenses, "noun", stats=lexstats
        )
        nouns = sorted({noun for _, noun in pairs.entries})
        membership = {
            noun: map_to_supersenses(noun, gloss_map, inventory) for noun in nouns
        }
        mapped_obs = sum(
            count for (_, noun), count in pairs.entries.items() if membership[noun]
        )
        joints, obs, builders, names, skipped = [], [], [], [], []
        for category in inventory.categories:
            aj = build_cn_restricted(pairs, category, membership)
            if aj is None:
                skipped.append(category)
                continue
            joints.append(aj)
            kept = {
                key: count
                for key, count in pairs.entries.items()
                if category in membership[key[1]]
            }
            obs.append(kept)
            builders.append(_pair_builder())
            names.append(category)
        analyses["noun_supersense"] = {
            "x": "noun within supersense category",
            "category_count": inventory.category_count,
            "H_C_global": entropy(build_cn(pairs).joint.row_marginal()),
            "observations": pairs.total,
            "mapped_observations": mapped_obs,
            "distinct_nouns": len(nouns),
            "mapped_distinct_nouns": sum(1 for n in nouns if membership[n]),
            "skipped_categories": skipped,
            "categories": _category_records(joints, obs, builders, names, boot),
        }

    if "adjective_supersense" in cfg.analyses:
        inventory = load_supersenses_file(
            cfg.adjective_supersenses, "adjective", stats=lexstats
        )
        adjectives = sorted({adj for adj, _, _ in triples.entries})
        membership = {
            adj: map_to_supersenses(adj, gloss_map, inventory) for adj in adjectives
        }
        mapped_obs = sum(
            count
            for (adj, _, _), count in triples.entries.items()
            if membership[adj]
        )
        joints, obs, builders, names, skipped = [], [], [], [], []
        for category in inventory.categories:
            aj = build_ca_restricted(triples, category, membership)
            if aj is None:
                skipped.append(category)
                continue
            joints.append(aj)
            kept = {
                key: count
                for key, count in triples.entries.items()
                if category in membership[key[0]]
            }
            obs.append(kept)
            builders.append(_triple_builder())
            names.append(category)
        analyses["adjective_supersense"] = {
            "x": "adjective within supersense category",
            "category_count": inventory.category_count,
            "H_C_global": entropy(build_ca(triples).joint.row_marginal()),
            "observations": triples.total,
            "mapped_observations": mapped_obs,
            "distinct_adjectives": len(adjectives),
            "mapped_distinct_adjectives": sum(1 for a in adjectives if membership[a]),
            "skipped_categories": skipped,
            "categories": _category_records(joints, obs, builders, names, boot),
        }

    if "synset" in cfg.analyses:
        inventory = load_synsets_file(cfg.synsets, stats=lexstats)
        nouns = sorted({noun for _, noun in pairs.entries})
        synset_map = {
            noun: map_to_synsets(noun, gloss_map, inventory) for noun in nouns
        }
        aj = build_cs(pairs, synset_map)
        kept, _dropped = split_pairs_by_synset_coverage(pairs, synset_map)
        build = lambda resampled: expand_synsets(
            PairCount(entries=dict(resampled)), synset_map
        )
        interval = bootstrap_mi(kept.entries, build, boot)
        record = _analysis_record(aj, interval)
        record["distinct_nouns"] = len(nouns)
        record["nouns_with_synsets"] = sum(1 for n in nouns if synset_map[n])
        analyses["synset"] = {"x": "noun synset", **record}

    report = {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "settings": _settings_block(cfg),
        "inputs": _inputs_block(cfg),
        "lexicon_lines_skipped": {
            "dictionary": lexstats.dictionary_lines_skipped,
            "inventories": lexstats.inventory_lines_skipped,
        },
        "analyses": analyses,
    }
    check_report_identities(report)

    _write_json(report, os.path.join(cfg.output, "report.json"))
    for group, filename in (
        ("noun_supersense", "noun_supersense.csv"),
        ("adjective_supersense", "adjective_supersense.csv"),
    ):
        if group in analyses:
            _write_figure_csv(
                analyses[group]["categories"], os.path.join(cfg.output, filename)
            )
    return report


def _settings_block(cfg: RunConfig) -> dict:
    rules = cfg.rules
    return {
        "extraction": {
            "match_policy": rules.match_policy,
            "classifier_deprels": sorted(rules.classifier_deprels),
            "classifier_xpos": sorted(rules.classifier_xpos),
            "noun_upos": sorted(rules.noun_upos),
            "adjective_deprels": sorted(rules.adjective_deprels),
            "adjective_upos": sorted(rules.adjective_upos),
        },
        "bootstrap": {
            "method": "percentile",
            "replicates": cfg.bootstrap.replicates,
            "confidence": cfg.bootstrap.confidence,
            "seed": cfg.bootstrap.seed,
            "resampling_unit": "extracted tuple observation",
        },
        "estimation": "plug-in (empirical relative frequencies, no smoothing)",
        "counting": "token-level; every corpus occurrence counts once, no "
        "within-sentence deduplication",
        "category_entropy": "per-category H(C) uses the restricted, renormalized "
        "sub-corpus; the unrestricted value is emitted as H_C_global",
        "drop_policy": "observations whose word is untranslatable or unlisted are "
        "dropped, never pooled; drop counts are reported",
        "multi_membership": "a word in several supersense categories contributes "
        "to each category independently",
        "synset_weighting": "uniform 1/m over a noun's m synsets",
    }


def _inputs_block(cfg: RunConfig) -> dict:
    inputs = {"analyses": list(cfg.analyses)}
    if any(a in NEEDS_PAIRS for a in cfg.analyses):
        inputs["pairs"] = cfg.pairs_path()
    if any(a in NEEDS_TRIPLES for a in cfg.analyses):
        inputs["triples"] = cfg.triples_path()
    for name in ("dictionary", "noun_supersenses", "adjective_supersenses", "synsets"):
        value = getattr(cfg, name)
        if value:
            inputs[name] = value
    return inputs


def _record_identity_ok(record: Mapping) -> bool:
    gap = record["H_C"] - record["H_C_given_X"] - record["I_C_X"]
    return abs(gap) < IDENTITY_TOL


def check_report_identities(report: Mapping) -> None:
    """Every emitted record must satisfy H(C) - H(C|X) = I(C;X) within
    1e-9 bits; a violation is an internal error, not a data error."""
    for name, record in report["analyses"].items():
        if "categories" in record:
            for sub in record["categories"]:
                if not _record_identity_ok(sub):
                    raise ReportIntegrityError(
                        f"analyses.{name}.categories[{sub['category']}]: "
                        "H - H|X != I beyond 1e-9"
                    )
        else:
            if not _record_identity_ok(record):
                raise ReportIntegrityError(f"analyses.{name}: H - H|X != I beyond 1e-9")


def _write_json(payload: Mapping, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        json.dump(payload, out, ensure_ascii=False, sort_keys=True, indent=2)
        out.write("\n")


def _write_figure_csv(records: list[Mapping], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(",".join(FIGURE_COLUMNS) + "\n")
        for record in records:
            out.write(
                ",".join(
                    [
                        record["category"],
                        str(record["H_C"]),
                        str(record["I_C_X"]),
                        str(record["H_C_given_X"]),
                        str(record["interval"]["lower"]),
                        str(record["interval"]["upper"]),
                    ]
                )
                + "\n"
            )
