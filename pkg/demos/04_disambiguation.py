"""
==========================
Nearest-neighbor WSD
==========================

Disambiguation matches a word's contextual vector against the stored
embeddings of every sense sharing its lemma (and optionally POS) and
keeps the full cosine ranking. A deterministic tie-break and a WordNet
first-sense fallback make batch runs reproducible and total.
"""
import tempfile
from pathlib import Path

import numpy as np

from sensevec import SenseIndex, build_inventory, disambiguate
from sensevec.corpus import SenseEmbeddingStore
from sensevec.synthetic import ClusterWorld

with tempfile.TemporaryDirectory() as tmp:
    world = ClusterWorld(dim=8, n_lemmas=6, seed=3)
    world.write_wordnet(Path(tmp) / "wn")
    inv = build_inventory(Path(tmp) / "wn")

    # store the known cluster centers as the sense embeddings
    store = SenseEmbeddingStore(8)
    for key, center in world.centers.items():
        store.add(key, center, "annotated", 1)
    idx = SenseIndex(store, inv, match_mode="lemma_pos", fallback="first_sense")

    lemma = sorted(world.lemma_keys)[0]
    pos = world.lemma_pos[lemma]
    true_key = world.lemma_keys[lemma][1]

    # a context vector near the second sense's cluster, plus noise
    rng = np.random.default_rng(9)
    c = world.centers[true_key] + rng.normal(scale=0.05, size=8).astype("float32")

    result = disambiguate(idx, c, lemma, pos)
    print(f"target lemma: {lemma} ({pos}), true sense: {true_key}")
    print(f"chosen:       {result.chosen} (correct={result.chosen == true_key})")
    print("ranking:")
    for key, sim in result.ranked:
        print(f"  {sim:+.4f}  {key}")

    # unknown (lemma, pos) slots fall back to the WordNet first sense
    fallback = disambiguate(idx, c, lemma, "r")
    print(f"\nno adverb senses exist for {lemma!r}: "
          f"fallback to {fallback.chosen} (used_fallback={fallback.used_fallback})")
