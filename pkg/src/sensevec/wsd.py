"""Nearest-neighbor disambiguation against lemma-matched sense embeddings.

A contextual vector is scored by cosine against every candidate sense
sharing the target's lemma (and POS, in `lemma_pos` mode). When the
index holds concatenated 2D vectors, D-dim queries are duplicated into
that space first. Candidate sets are small, so scoring is exhaustive.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .corpus import AnnotatedSentence, AnnotatedToken, SenseEmbeddingStore
from .errors import (
    DimensionMismatch,
    EmptyStore,
    NoCandidates,
    SensevecError,
    UnknownLemma,
)
from .inventory import SenseInventory
from .vectorspace import STORAGE_DTYPE, cosine, duplicate_contextual

log = logging.getLogger(__name__)

MATCH_MODES = ("lemma_only", "lemma_pos")
FALLBACKS = ("error", "first_sense")


@dataclass(frozen=True)
class Disambiguation:
    ranked: tuple[tuple[str, float], ...]
    used_fallback: bool

    @property
    def chosen(self) -> str:
        return self.ranked[0][0]

    @property
    def similarity(self) -> float:
        return self.ranked[0][1]


class SenseIndex:
    """Immutable index over the intersection of store and inventory keys."""

    def __init__(self, store: SenseEmbeddingStore, inv: SenseInventory,
                 match_mode: str = "lemma_pos", fallback: str = "first_sense"):
        if len(store) == 0:
            raise EmptyStore("cannot index an empty store")
        if match_mode not in MATCH_MODES:
            raise ValueError(f"match_mode must be one of {MATCH_MODES}")
        if fallback not in FALLBACKS:
            raise ValueError(f"fallback must be one of {FALLBACKS}")
        self.store = store
        self.inv = inv
        self.match_mode = match_mode
        self.fallback = fallback
        self.keys = frozenset(store.entries) & frozenset(inv.sense_to_synset)
        self.dropped_store_keys = len(store) - len(self.keys)
        self.missing_inventory_keys = inv.num_senses - len(self.keys)
        if self.dropped_store_keys:
            log.warning("%d store keys absent from inventory dropped from index",
                        self.dropped_store_keys)
        if self.missing_inventory_keys:
            log.warning("%d inventory senses have no stored embedding",
                        self.missing_inventory_keys)

    @property
    def coverage(self) -> float:
        return len(self.keys) / self.inv.num_senses if self.inv.num_senses else 0.0

    def candidates(self, lemma: str, pos: Optional[str]) -> list[str]:
        if self.match_mode == "lemma_only":
            pos = None
        return [k for k in self.inv.senses_for_lemma(lemma, pos) if k in self.keys]


def _align(idx: SenseIndex, c: np.ndarray) -> np.ndarray:
    c = np.asarray(c, dtype=STORAGE_DTYPE)
    if c.size == idx.store.dimension:
        return c
    if 2 * c.size == idx.store.dimension:
        return duplicate_contextual(c)
    raise DimensionMismatch(
        f"query is {c.size}-dim, index holds {idx.store.dimension}-dim vectors")


def disambiguate(idx: SenseIndex, c: np.ndarray, lemma: str,
                 pos: Optional[str] = None) -> Disambiguation:
    """Rank candidate senses by cosine; ties break ascending by key.

    With no candidates: `error` raises NoCandidates; `first_sense`
    returns WordNet's first sense for (lemma, pos) - or lemma-wide if
    the pair has none - with similarity 0.0 when that sense lacks a
    stored vector. A lemma the inventory has never seen raises
    UnknownLemma.
    """
    aligned = _align(idx, c)
    cands = idx.candidates(lemma, pos)
    if cands:
        scored = sorted(
            ((key, cosine(aligned, idx.store.vector(key))) for key in cands),
            key=lambda pair: (-pair[1], pair[0]))
        return Disambiguation(tuple(scored), used_fallback=False)
    if idx.fallback == "error":
        raise NoCandidates(lemma, pos)
    first = idx.inv.first_sense(lemma, pos if idx.match_mode == "lemma_pos" else None)
    if first is None:
        first = idx.inv.first_sense(lemma)
    if first is None:
        raise UnknownLemma(lemma)
    sim = cosine(aligned, idx.store.vector(first)) if first in idx.store else 0.0
    return Disambiguation(((first, sim),), used_fallback=True)


@dataclass(frozen=True)
class BatchRecord:
    sentence_id: str
    token_index: int
    result: Optional[Disambiguation]
    error: Optional[str] = None

    def to_dict(self, top_k: Optional[int] = None) -> dict:
        if self.result is None:
            return {"sentence_id": self.sentence_id,
                    "token_index": self.token_index,
                    "error": self.error}
        ranked = self.result.ranked if top_k is None else self.result.ranked[:top_k]
        return {"sentence_id": self.sentence_id,
                "token_index": self.token_index,
                "chosen": self.result.chosen,
                "similarity": self.result.similarity,
                "used_fallback": self.result.used_fallback,
                "ranked": [[k, s] for k, s in ranked]}


def _annotated_targets(token: AnnotatedToken) -> bool:
    return token.sense_key is not None


def disambiguate_batch(
        idx: SenseIndex,
        sentences: Iterable[AnnotatedSentence],
        select: Optional[Callable[[AnnotatedToken], bool]] = None,
        workers: int = 1) -> Iterator[BatchRecord]:
    """Disambiguate every selected token, preserving stream order.

    Per-token failures become error records without aborting the
    stream. The default selection targets sense-annotated tokens. The
    index is immutable, so `workers > 1` fans tokens out to threads
    with a deterministic order-preserving merge.
    """
    if select is None:
        select = _annotated_targets
    targets = [(s.sentence_id, i, tok)
               for s in sentences
               for i, tok in enumerate(s.tokens)
               if select(tok)]

    def run(item: tuple[str, int, AnnotatedToken]) -> BatchRecord:
        sid, i, tok = item
        if tok.vector is None:
            return BatchRecord(sid, i, None, error="MissingEmbedding: token has no vector")
        try:
            result = disambiguate(idx, tok.vector, tok.lemma, tok.pos)
            return BatchRecord(sid, i, result)
        except SensevecError as exc:
            return BatchRecord(sid, i, None, error=f"{type(exc).__name__}: {exc}")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(run, targets)
    else:
        for item in targets:
            yield run(item)


def write_batch_records(records: Iterable[BatchRecord], writer,
                        top_k: Optional[int] = None) -> int:
    n = 0
    for record in records:
        writer.write(json.dumps(record.to_dict(top_k)) + "\n")
        n += 1
    return n
