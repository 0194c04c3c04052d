"""Streaming reader for CoNLL-U files.

Sentences arrive as blank-line-delimited blocks of 10-column token lines.
Multiword-token ranges (`1-2`) and empty nodes (`1.1`) are skipped; `_`
lemmas fall back to the surface form. In strict mode any malformed line or
head structure raises; in lenient mode (the default, meant for large noisy
auto-parsed corpora) the whole offending block is skipped and counted.
"""
from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

log = logging.getLogger(__name__)

N_COLUMNS = 10

_MULTIWORD_ID = re.compile(r"^\d+-\d+$")
_EMPTY_NODE_ID = re.compile(r"^\d+\.\d+$")


class ConlluFormatError(ValueError):
    """Malformed CoNLL-U input; message carries source and line number."""


@dataclass(frozen=True)
class Token:
    """One syntactic word: 1-based index, surface form, lemma, POS tags,
    and the head/relation link."""

    index: int
    form: str
    lemma: str
    upos: str
    xpos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    source_id: str

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass
class IngestStats:
    sentences: int = 0
    skipped_blocks: int = 0
    files: list[str] = field(default_factory=list)

    def merge(self, other: "IngestStats") -> None:
        self.sentences += other.sentences
        self.skipped_blocks += other.skipped_blocks
        self.files.extend(other.files)


def _parse_token(line: str, where: str) -> Token | None:
    """Parse one token line; None for skipped multiword/empty-node lines."""
    fields = line.split("\t")
    if len(fields) != N_COLUMNS:
        raise ConlluFormatError(f"{where}: expected 10 columns, got {len(fields)}")
    raw_id = fields[0]
    if _MULTIWORD_ID.match(raw_id) or _EMPTY_NODE_ID.match(raw_id):
        return None
    try:
        index = int(raw_id)
    except ValueError:
        raise ConlluFormatError(f"{where}: non-integer token id {raw_id!r}") from None
    try:
        head = int(fields[6])
    except ValueError:
        raise ConlluFormatError(f"{where}: non-integer head {fields[6]!r}") from None
    form = fields[1]
    lemma = fields[2] if fields[2] != "_" else form
    return Token(
        index=index,
        form=form,
        lemma=lemma,
        upos=fields[3],
        xpos=fields[4],
        head=head,
        deprel=fields[7],
    )


def _check_structure(tokens: list[Token], where: str, strict: bool) -> None:
    n = len(tokens)
    if n == 0:
        raise ConlluFormatError(f"{where}: block contains no token lines")
    for pos, tok in enumerate(tokens, start=1):
        if tok.index != pos:
            raise ConlluFormatError(
                f"{where}: token ids not contiguous (expected {pos}, got {tok.index})"
            )
        if not 0 <= tok.head <= n:
            raise ConlluFormatError(
                f"{where}: head {tok.head} out of range [0, {n}] at token {tok.index}"
            )
        if tok.head == tok.index:
            raise ConlluFormatError(f"{where}: token {tok.index} is its own head")
    if not strict:
        return
    roots = [tok.index for tok in tokens if tok.head == 0]
    if len(roots) != 1:
        raise ConlluFormatError(f"{where}: expected exactly 1 root, got {len(roots)}")
    # Every token must reach the root without revisiting a node.
    for tok in tokens:
        seen = set()
        cursor = tok.index
        while cursor != 0:
            if cursor in seen:
                raise ConlluFormatError(f"{where}: head cycle at token {tok.index}")
            seen.add(cursor)
            cursor = tokens[cursor - 1].head


def read_sentences(
    lines: Iterable[str],
    mode: str = "lenient",
    source: str = "<stream>",
    stats: IngestStats | None = None,
) -> Iterator[Sentence]:
    """Yield one Sentence per well-formed block of `lines`.

    mode="strict" raises ConlluFormatError on the first problem;
    mode="lenient" skips the offending block, logs a warning, and bumps
    stats.skipped_blocks.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"mode must be 'strict' or 'lenient', not {mode!r}")
    if stats is None:
        stats = IngestStats()

    tokens: list[Token] = []
    block_start = None
    bad_block: ConlluFormatError | None = None

    def finish() -> Sentence | None:
        nonlocal tokens, block_start, bad_block
        error = bad_block
        block_tokens, tokens = tokens, []
        start, block_start = block_start, None
        bad_block = None
        if error is None:
            try:
                _check_structure(block_tokens, f"{source}:{start}", mode == "strict")
            except ConlluFormatError as exc:
                error = exc
        if error is not None:
            if mode == "strict":
                raise error
            log.warning("skipping block: %s", error)
            stats.skipped_blocks += 1
            return None
        stats.sentences += 1
        return Sentence(tokens=tuple(block_tokens), source_id=f"{source}:{start}")

    saw_content = False
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if line == "":
            if saw_content:
                sentence = finish()
                if sentence is not None:
                    yield sentence
            saw_content = False
            continue
        if block_start is None:
            block_start = lineno
        saw_content = True
        if line.startswith("#"):
            continue
        if bad_block is not None:
            continue
        try:
            token = _parse_token(line, f"{source}:{lineno}")
        except ConlluFormatError as exc:
            if mode == "strict":
                raise
            bad_block = exc
            continue
        if token is not None:
            tokens.append(token)
    if saw_content:
        sentence = finish()
        if sentence is not None:
            yield sentence


def read_conllu_file(
    path, mode: str = "lenient", stats: IngestStats | None = None
) -> Iterator[Sentence]:
    if stats is not None:
        stats.files.append(str(path))
    with io.open(path, "r", encoding="utf-8") as handle:
        yield from read_sentences(handle, mode=mode, source=str(path), stats=stats)
