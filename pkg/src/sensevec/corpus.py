"""Annotated-corpus ingest, per-sense bootstrap averaging and store I/O.

The corpus format is JSONL, one sentence per line::

    {"sentence_id": str, "dim": int,
     "tokens": [{"text": str, "lemma": str, "pos": "n|v|a|r|null",
                 "sense_key": str|null, "vector": [float x dim]}]}

The embedding-store text format is a `<count> <dim>` header followed by
one `<sense_key> <provenance> <support_count> <v1> ... <vdim>` line per
entry, floats at 9 significant digits, lexicographic key order. Nine
significant digits round-trip float32 exactly, so save/load/save is
byte-stable.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, NamedTuple, Optional

import numpy as np

from .errors import (
    BadSenseKey,
    CountMismatch,
    DimensionMismatch,
    DuplicateSenseKey,
    MalformedEntry,
    MalformedHeader,
    MalformedJson,
    NoAnnotations,
)
from .inventory import POS_TAGS, parse_sense_key
from .vectorspace import STORAGE_DTYPE

log = logging.getLogger(__name__)

PROVENANCES = ("annotated", "synset", "hypernym", "lexname", "gloss", "concat")


@dataclass(frozen=True)
class AnnotatedToken:
    text: str
    lemma: str
    pos: Optional[str]
    sense_key: Optional[str]
    vector: Optional[np.ndarray]


@dataclass(frozen=True)
class AnnotatedSentence:
    sentence_id: str
    tokens: tuple[AnnotatedToken, ...]


class StoreEntry(NamedTuple):
    vector: np.ndarray
    provenance: str
    support_count: int


class SenseEmbeddingStore:
    """Map from sense key to (vector, provenance, support_count)."""

    def __init__(self, dimension: int,
                 entries: Optional[dict[str, StoreEntry]] = None):
        self.dimension = int(dimension)
        self.entries: dict[str, StoreEntry] = entries if entries is not None else {}

    def add(self, key: str, vector: np.ndarray, provenance: str,
            support_count: int = 0) -> None:
        vector = np.asarray(vector, dtype=STORAGE_DTYPE)
        if vector.size != self.dimension:
            raise DimensionMismatch(
                f"store is {self.dimension}-dim, entry {key!r} is {vector.size}-dim")
        if provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        if provenance == "annotated" and support_count < 1:
            raise ValueError("annotated entries need support_count >= 1")
        self.entries[key] = StoreEntry(vector, provenance, int(support_count))

    def vector(self, key: str) -> np.ndarray:
        return self.entries[key].vector

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def sorted_keys(self) -> list[str]:
        return sorted(self.entries)


def _parse_token(obj: dict, line_no: int, dim: int) -> AnnotatedToken:
    try:
        text = obj["text"]
        lemma = obj["lemma"]
        pos = obj.get("pos")
        sense_key = obj.get("sense_key")
        vector = obj["vector"]
    except (KeyError, TypeError):
        raise MalformedJson(line_no, "token missing text/lemma/vector") from None
    if not isinstance(text, str) or not isinstance(lemma, str):
        raise MalformedJson(line_no, "token text/lemma must be strings")
    if pos is not None and pos not in POS_TAGS:
        raise MalformedJson(line_no, f"bad pos {pos!r}")
    if sense_key is not None:
        try:
            parse_sense_key(sense_key)
        except BadSenseKey:
            raise BadSenseKey(sense_key, line_no) from None
    arr = np.asarray(vector, dtype=STORAGE_DTYPE)
    if arr.ndim != 1 or arr.size != dim:
        raise DimensionMismatch(
            f"token vector has {arr.size} dims, sentence declares {dim}",
            line_no=line_no)
    if not np.all(np.isfinite(arr)):
        raise MalformedJson(line_no, "non-finite vector entry")
    return AnnotatedToken(text, lemma, pos, sense_key, arr)


def load_annotated_corpus(reader: Iterable[str]) -> Iterator[AnnotatedSentence]:
    """Stream sentences from corpus JSONL, validating as it goes.

    Dimension uniformity is checked against the first sentence seen;
    sentence ids must be unique within the stream.
    """
    corpus_dim: Optional[int] = None
    seen_ids: set[str] = set()
    for line_no, line in enumerate(reader, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedJson(line_no, f"invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise MalformedJson(line_no, "line is not an object")
        try:
            sentence_id = obj["sentence_id"]
            dim = obj["dim"]
            tokens = obj["tokens"]
        except KeyError as exc:
            raise MalformedJson(line_no, f"missing field {exc.args[0]!r}") from None
        if not isinstance(sentence_id, str) or not isinstance(dim, int) \
                or not isinstance(tokens, list):
            raise MalformedJson(line_no, "bad sentence_id/dim/tokens types")
        if dim < 1:
            raise MalformedJson(line_no, "dim must be >= 1")
        if corpus_dim is None:
            corpus_dim = dim
        elif dim != corpus_dim:
            raise DimensionMismatch(
                f"sentence declares dim {dim}, corpus started with {corpus_dim}",
                line_no=line_no)
        if sentence_id in seen_ids:
            raise MalformedJson(line_no, f"duplicate sentence_id {sentence_id!r}")
        seen_ids.add(sentence_id)
        yield AnnotatedSentence(
            sentence_id,
            tuple(_parse_token(tok, line_no, dim) for tok in tokens),
        )


def bootstrap_sense_embeddings(
        corpus: Iterable[AnnotatedSentence]) -> SenseEmbeddingStore:
    """Average each sense's contextual vectors into one embedding.

    Sums run at float64 in corpus order; every annotated occurrence
    counts (no deduplication). Senses never annotated are absent.
    """
    sums: dict[str, np.ndarray] = {}
    counts: dict[str, int] = {}
    dim: Optional[int] = None
    for sentence in corpus:
        for token in sentence.tokens:
            if token.sense_key is None:
                continue
            if token.vector is None:
                raise ValueError(f"annotated token {token.text!r} has no vector")
            if dim is None:
                dim = token.vector.size
            acc = sums.get(token.sense_key)
            if acc is None:
                sums[token.sense_key] = token.vector.astype(np.float64)
                counts[token.sense_key] = 1
            else:
                acc += token.vector.astype(np.float64)
                counts[token.sense_key] += 1
    if dim is None:
        raise NoAnnotations("corpus has no sense-annotated tokens")
    store = SenseEmbeddingStore(dim)
    for key, total in sums.items():
        store.add(key, (total / counts[key]).astype(STORAGE_DTYPE),
                  "annotated", counts[key])
    return store


def _format_float(v: float) -> str:
    return format(float(v), ".9g")


def save_store(store: SenseEmbeddingStore, writer: IO[str]) -> None:
    """Write the store in the text format, lexicographic key order."""
    writer.write(f"{len(store)} {store.dimension}\n")
    for key in store.sorted_keys():
        vec, provenance, support = store.entries[key]
        values = " ".join(_format_float(v) for v in vec)
        writer.write(f"{key} {provenance} {support} {values}\n")


def load_store(reader: IO[str]) -> SenseEmbeddingStore:
    """Parse a store file; the header count must match the entry lines."""
    header = reader.readline()
    fields = header.split()
    if len(fields) != 2:
        raise MalformedHeader(f"expected '<count> <dim>', got {header!r}")
    try:
        count, dim = int(fields[0]), int(fields[1])
    except ValueError:
        raise MalformedHeader(f"non-integer header {header!r}") from None
    if count < 0 or dim < 1:
        raise MalformedHeader(f"header out of range: {header!r}")
    store = SenseEmbeddingStore(dim)
    n_lines = 0
    for line_no, line in enumerate(reader, 2):
        if not line.strip():
            continue
        n_lines += 1
        parts = line.split()
        if len(parts) != 3 + dim:
            raise MalformedEntry(line_no, f"expected {3 + dim} fields, got {len(parts)}")
        key, provenance, support_s = parts[0], parts[1], parts[2]
        if provenance not in PROVENANCES:
            raise MalformedEntry(line_no, f"unknown provenance {provenance!r}")
        try:
            support = int(support_s)
            vec = np.array(parts[3:], dtype=STORAGE_DTYPE)
        except ValueError:
            raise MalformedEntry(line_no, "non-numeric field") from None
        if not np.all(np.isfinite(vec)):
            raise MalformedEntry(line_no, "non-finite vector entry")
        if key in store:
            raise DuplicateSenseKey(key)
        try:
            store.add(key, vec, provenance, support)
        except ValueError as exc:
            raise MalformedEntry(line_no, str(exc)) from None
    if n_lines != count:
        raise CountMismatch(count, n_lines)
    return store


def save_store_path(store: SenseEmbeddingStore, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        save_store(store, fh)


def load_store_path(path) -> SenseEmbeddingStore:
    with open(path, encoding="utf-8") as fh:
        return load_store(fh)


def load_corpus_path(path) -> Iterator[AnnotatedSentence]:
    with open(path, encoding="utf-8") as fh:
        yield from load_annotated_corpus(fh)
