"""Sense-specific dictionary embeddings from gloss token sequences.

A token plan is the pseudo-sentence handed to the embedding provider:
the sense's own lemma first, then every synset lemma in inventory
order, then the gloss split on whitespace with no other preprocessing.
Underscored collocations expand to multiple tokens. The provider embeds
each plan as one sequence and returns the corpus JSONL format with
sentence_id equal to the sense key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np

from .corpus import AnnotatedSentence, SenseEmbeddingStore, StoreEntry
from .errors import (
    DimensionMismatch,
    EmptyInput,
    MalformedJson,
    MissingGloss,
    UnknownSense,
)
from .inventory import SenseInventory
from .vectorspace import concat_sense, mean


@dataclass(frozen=True)
class GlossTokenPlan:
    sense_key: str
    tokens: tuple[str, ...]


def _lemma_tokens(lemma: str) -> list[str]:
    return lemma.replace("_", " ").split()


def build_gloss_token_plan(sense_key: str, inv: SenseInventory) -> GlossTokenPlan:
    """Token sequence for one sense: sense lemma, synset lemmas, gloss words."""
    if sense_key not in inv.sense_to_synset:
        raise UnknownSense(sense_key)
    synset = inv.synset_of(sense_key)
    sense_lemma = sense_key.split("%", 1)[0]
    tokens = _lemma_tokens(sense_lemma)
    for lemma in synset.lemmas:
        tokens.extend(_lemma_tokens(lemma))
    tokens.extend(synset.gloss.split())
    return GlossTokenPlan(sense_key, tuple(tokens))


def iter_gloss_token_plans(inv: SenseInventory) -> Iterator[GlossTokenPlan]:
    """Plans for every inventory sense, lexicographic key order."""
    for key in sorted(inv.sense_to_synset):
        yield build_gloss_token_plan(key, inv)


def write_gloss_plans(plans: Iterable[GlossTokenPlan], writer: IO[str]) -> int:
    n = 0
    for plan in plans:
        writer.write(json.dumps(
            {"sense_key": plan.sense_key, "tokens": list(plan.tokens)}) + "\n")
        n += 1
    return n


def read_gloss_plans(reader: Iterable[str]) -> Iterator[GlossTokenPlan]:
    for line_no, line in enumerate(reader, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            yield GlossTokenPlan(obj["sense_key"], tuple(obj["tokens"]))
        except (json.JSONDecodeError, KeyError, TypeError):
            raise MalformedJson(line_no, "bad gloss plan line") from None


def build_dictionary_embedding(token_vectors: Iterable[np.ndarray]) -> np.ndarray:
    """Average the provider's per-token vectors for one plan."""
    return mean(token_vectors)


def gloss_store_from_corpus(
        sentences: Iterable[AnnotatedSentence]) -> SenseEmbeddingStore:
    """Assemble a gloss-provenance store from provider output.

    Each sentence's id is a sense key and its token vectors average
    into that sense's dictionary embedding; support_count records the
    token count.
    """
    store: SenseEmbeddingStore | None = None
    for sentence in sentences:
        vectors = [t.vector for t in sentence.tokens if t.vector is not None]
        if not vectors:
            raise MissingGloss(sentence.sentence_id)
        emb = build_dictionary_embedding(vectors)
        if store is None:
            store = SenseEmbeddingStore(emb.size)
        store.add(sentence.sentence_id, emb, "gloss", len(vectors))
    if store is None:
        raise EmptyInput("gloss corpus contained no sentences")
    return store


def merge_concat(sense_store: SenseEmbeddingStore,
                 gloss_store: SenseEmbeddingStore) -> SenseEmbeddingStore:
    """Concatenate normalized sense and dictionary halves into a 2D store.

    The gloss store must cover every sense-store key; support counts
    carry over from the sense side.
    """
    if sense_store.dimension != gloss_store.dimension:
        raise DimensionMismatch(
            f"sense store is {sense_store.dimension}-dim, "
            f"gloss store is {gloss_store.dimension}-dim")
    merged = SenseEmbeddingStore(2 * sense_store.dimension)
    for key in sense_store.sorted_keys():
        if key not in gloss_store:
            raise MissingGloss(key)
        sense_entry = sense_store.entries[key]
        merged.entries[key] = StoreEntry(
            concat_sense(sense_entry.vector, gloss_store.entries[key].vector),
            "concat", sense_entry.support_count)
    return merged
