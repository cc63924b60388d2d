"""Full-coverage imputation over the WordNet ontology.

Annotated sense embeddings are lifted to three abstraction tables in
strict stage order (synset, then hypernym, then lexname), and every
sense missing from the store is imputed from the first table that can
supply a value. Inputs to every mean are gathered in lexicographic
order so rebuilds are bit-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .corpus import SenseEmbeddingStore, StoreEntry
from .errors import NonAnnotatedInput
from .inventory import SenseInventory, SynsetId
from .vectorspace import mean

PROPAGATED_PROVENANCES = ("annotated", "synset", "hypernym", "lexname")


@dataclass
class CoverageReport:
    annotated: int = 0
    synset: int = 0
    hypernym: int = 0
    lexname: int = 0
    uncovered: int = 0
    uncovered_keys: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return (self.annotated + self.synset + self.hypernym
                + self.lexname + self.uncovered)

    def to_dict(self) -> dict:
        return {
            "annotated": self.annotated,
            "synset": self.synset,
            "hypernym": self.hypernym,
            "lexname": self.lexname,
            "uncovered": self.uncovered,
            "uncovered_keys": list(self.uncovered_keys),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def compute_synset_embeddings(
        store: SenseEmbeddingStore,
        inv: SenseInventory) -> dict[SynsetId, np.ndarray]:
    """Average each synset's annotated sense embeddings.

    Synsets with no annotated sense are absent from the result. Store
    keys outside the inventory are ignored.
    """
    for entry in store.entries.values():
        if entry.provenance != "annotated":
            raise NonAnnotatedInput(
                f"synset stage requires annotated-only input, saw {entry.provenance!r}")
    return _synset_table(store, inv)


def _synset_table(store: SenseEmbeddingStore,
                  inv: SenseInventory) -> dict[SynsetId, np.ndarray]:
    buckets: dict[SynsetId, list[np.ndarray]] = {}
    for key in store.sorted_keys():
        sid = inv.sense_to_synset.get(key)
        if sid is None:
            continue
        buckets.setdefault(sid, []).append(store.entries[key].vector)
    return {sid: mean(vecs) for sid, vecs in buckets.items()}


def compute_hypernym_embeddings(
        synset_emb: dict[SynsetId, np.ndarray],
        inv: SenseInventory) -> dict[SynsetId, np.ndarray]:
    """Average, for each hypernym target, its embedded direct hyponyms
    plus its own synset embedding when it has one."""
    hyponyms: dict[SynsetId, set[SynsetId]] = {}
    for syn in inv.synsets.values():
        for hyp in syn.hypernyms:
            hyponyms.setdefault(hyp, set()).add(syn.id)
    result: dict[SynsetId, np.ndarray] = {}
    for target in sorted(hyponyms):
        members = {c for c in hyponyms[target] if c in synset_emb}
        if target in synset_emb:
            members.add(target)
        if members:
            result[target] = mean(synset_emb[m] for m in sorted(members))
    return result


def compute_lexname_embeddings(
        synset_emb: dict[SynsetId, np.ndarray],
        inv: SenseInventory) -> dict[str, np.ndarray]:
    """Average embedded synsets per lexicographer file."""
    buckets: dict[str, list[np.ndarray]] = {}
    for sid in sorted(synset_emb):
        buckets.setdefault(inv.synsets[sid].lexname, []).append(synset_emb[sid])
    return {lexname: mean(vecs) for lexname, vecs in buckets.items()}


def propagate_full_coverage(
        store: SenseEmbeddingStore,
        inv: SenseInventory) -> tuple[SenseEmbeddingStore, CoverageReport]:
    """Impute every missing inventory sense through the three stages.

    Existing entries are never modified, so propagating an already-full
    store is the identity. Abstraction tables are computed from the
    annotated subset of the input only. Uncovered senses are reported,
    not fatal.
    """
    for entry in store.entries.values():
        if entry.provenance not in PROPAGATED_PROVENANCES:
            raise NonAnnotatedInput(
                f"cannot propagate a store with {entry.provenance!r} entries")

    annotated = SenseEmbeddingStore(store.dimension, {
        k: e for k, e in store.entries.items() if e.provenance == "annotated"})
    synset_emb = _synset_table(annotated, inv)
    hypernym_emb = compute_hypernym_embeddings(synset_emb, inv)
    lexname_emb = compute_lexname_embeddings(synset_emb, inv)

    out = SenseEmbeddingStore(store.dimension, dict(store.entries))
    report = CoverageReport()
    for key in sorted(inv.sense_to_synset):
        existing = out.entries.get(key)
        if existing is not None:
            setattr(report, existing.provenance,
                    getattr(report, existing.provenance) + 1)
            continue
        synset = inv.synset_of(key)
        if synset.id in synset_emb:
            out.entries[key] = StoreEntry(synset_emb[synset.id], "synset", 0)
            report.synset += 1
            continue
        parents = [hypernym_emb[h] for h in sorted(set(synset.hypernyms))
                   if h in hypernym_emb]
        if parents:
            out.entries[key] = StoreEntry(mean(parents), "hypernym", 0)
            report.hypernym += 1
            continue
        if synset.lexname in lexname_emb:
            out.entries[key] = StoreEntry(lexname_emb[synset.lexname], "lexname", 0)
            report.lexname += 1
            continue
        report.uncovered += 1
        report.uncovered_keys.append(key)
    return out, report
