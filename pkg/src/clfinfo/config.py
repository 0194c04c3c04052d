"""Run configuration: plain-text key-value files plus CLI overrides.

Every knob that fills a gap the source data cannot answer (extraction
match patterns, bootstrap settings, drop policies) lives here and is
echoed verbatim into report headers, so emitted numbers are
self-describing.
"""
from __future__ import annotations

import glob
import io
import os
from dataclasses import dataclass, field, fields, replace

from clfinfo.bootstrap import BootstrapConfig, BootstrapError
from clfinfo.extraction import ExtractionRules, RulesError

ANALYSES = ("noun", "adjective", "noun_supersense", "adjective_supersense", "synset")

# Which analyses need which inputs.
NEEDS_PAIRS = ("noun", "noun_supersense", "synset")
NEEDS_TRIPLES = ("adjective", "adjective_supersense")
NEEDS_DICTIONARY = ("noun_supersense", "adjective_supersense", "synset")


class ConfigError(ValueError):
    """Usage/config problem; maps to exit code 1."""


_SET_KEYS = {
    "classifier_deprels",
    "classifier_xpos",
    "noun_upos",
    "adjective_deprels",
    "adjective_upos",
}
_KNOWN_KEYS = _SET_KEYS | {
    "corpus",
    "mode",
    "match_policy",
    "dictionary",
    "noun_supersenses",
    "adjective_supersenses",
    "synsets",
    "analyses",
    "output",
    "pairs",
    "triples",
    "replicates",
    "confidence",
    "seed",
}


@dataclass
class RunConfig:
    corpus: tuple[str, ...] = ()
    mode: str = "lenient"
    output: str = "."
    pairs: str | None = None
    triples: str | None = None
    dictionary: str | None = None
    noun_supersenses: str | None = None
    adjective_supersenses: str | None = None
    synsets: str | None = None
    analyses: tuple[str, ...] = ("noun", "adjective")
    rules: ExtractionRules = field(default_factory=ExtractionRules)
    bootstrap: BootstrapConfig = field(default_factory=BootstrapConfig)

    def pairs_path(self) -> str:
        return self.pairs or os.path.join(self.output, "pairs.tsv")

    def triples_path(self) -> str:
        return self.triples or os.path.join(self.output, "triples.tsv")

    def corpus_files(self) -> list[str]:
        """Expand globs; a literal path is kept so missing files are
        reported by name instead of silently matching nothing."""
        out: list[str] = []
        for pattern in self.corpus:
            matches = sorted(glob.glob(pattern))
            out.extend(matches if matches else [pattern])
        return out


def parse_config_lines(lines, source: str = "<config>") -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key == "corpus" and key in values:
            values[key] = values[key] + "," + value
        else:
            values[key] = value
    return values


def read_config_file(path) -> dict[str, str]:
    try:
        with io.open(path, "r", encoding="utf-8") as handle:
            return parse_config_lines(handle, source=str(path))
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None


def _split_list(value: str) -> tuple[str, ...]:
    parts = [p for chunk in value.split(",") for p in chunk.split()]
    return tuple(p for p in parts if p)


def build_run_config(values: dict[str, str]) -> RunConfig:
    """Turn merged key-value settings into a validated RunConfig."""
    cfg = RunConfig()
    rule_kwargs = {}
    boot_kwargs = {}
    for key, value in values.items():
        if value is None:
            continue
        if key == "corpus":
            cfg.corpus = _split_list(value)
        elif key == "mode":
            if value not in ("strict", "lenient"):
                raise ConfigError(f"mode must be strict or lenient, not {value!r}")
            cfg.mode = value
        elif key == "output":
            cfg.output = value
        elif key in ("pairs", "triples", "dictionary", "noun_supersenses",
                     "adjective_supersenses", "synsets"):
            setattr(cfg, key, value)
        elif key == "analyses":
            requested = _split_list(value)
            unknown = [a for a in requested if a not in ANALYSES]
            if unknown:
                raise ConfigError(
                    f"unknown analyses {unknown}; choose from {list(ANALYSES)}"
                )
            # Keep the canonical order; duplicates collapse.
            cfg.analyses = tuple(a for a in ANALYSES if a in requested)
        elif key in _SET_KEYS:
            rule_kwargs[key] = frozenset(_split_list(value))
        elif key == "match_policy":
            rule_kwargs[key] = value
        elif key == "replicates":
            boot_kwargs[key] = _parse_int(key, value)
        elif key == "seed":
            boot_kwargs[key] = _parse_int(key, value)
        elif key == "confidence":
            try:
                boot_kwargs[key] = float(value)
            except ValueError:
                raise ConfigError(f"confidence must be a number, not {value!r}") from None
        else:  # pragma: no cover - _KNOWN_KEYS keeps this unreachable
            raise ConfigError(f"unhandled key {key!r}")
    try:
        cfg.rules = replace(ExtractionRules(), **rule_kwargs)
        cfg.bootstrap = replace(BootstrapConfig(), **boot_kwargs)
    except (RulesError, BootstrapError) as exc:
        raise ConfigError(str(exc)) from None
    return cfg


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, not {value!r}") from None


def validate_for_extract(cfg: RunConfig) -> None:
    if not cfg.corpus:
        raise ConfigError("no corpus given (corpus = path or glob)")
    missing = [p for p in cfg.corpus_files() if not os.path.exists(p)]
    if missing:
        raise ConfigError(f"corpus path does not exist: {missing[0]}")


def validate_for_analyze(cfg: RunConfig) -> None:
    if not cfg.analyses:
        raise ConfigError("no analyses selected")
    required: list[tuple[str, str | None]] = []
    if any(a in NEEDS_PAIRS for a in cfg.analyses):
        required.append(("pairs counts", cfg.pairs_path()))
    if any(a in NEEDS_TRIPLES for a in cfg.analyses):
        required.append(("triples counts", cfg.triples_path()))
    if any(a in NEEDS_DICTIONARY for a in cfg.analyses):
        required.append(("dictionary", cfg.dictionary))
    if "noun_supersense" in cfg.analyses:
        required.append(("noun_supersenses", cfg.noun_supersenses))
    if "adjective_supersense" in cfg.analyses:
        required.append(("adjective_supersenses", cfg.adjective_supersenses))
    if "synset" in cfg.analyses:
        required.append(("synsets", cfg.synsets))
    missing = [name for name, path in required if not path]
    if missing:
        raise ConfigError(
            "selected analyses need inputs that were not given: " + ", ".join(missing)
        )
    absent = [f"{name} ({path})" for name, path in required if path and not os.path.exists(path)]
    if absent:
        raise ConfigError("input files do not exist: " + ", ".join(absent))
