"""
======================================
Bootstrapping and propagating embeddings
======================================

Sense embeddings start as averages of sense-annotated contextual
vectors. Senses the corpus never annotates are then imputed through
three WordNet abstraction levels - synset, hypernym, lexname - until
the store covers the whole inventory.
"""
import tempfile
from pathlib import Path

from sensevec import build_inventory, propagate_full_coverage
from sensevec.corpus import bootstrap_sense_embeddings, load_corpus_path
from sensevec.synthetic import ClusterWorld

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    world = ClusterWorld(dim=8, n_lemmas=6, seed=1)
    world.write_wordnet(tmp / "wn")
    world.write_annotated_corpus(tmp / "corpus.jsonl", occurrences=5)
    inv = build_inventory(tmp / "wn")

    store = bootstrap_sense_embeddings(load_corpus_path(tmp / "corpus.jsonl"))
    print(f"bootstrapped {len(store)} of {inv.num_senses} senses "
          f"from annotation alone")
    example = store.sorted_keys()[0]
    entry = store.entries[example]
    head = [round(float(x), 3) for x in entry.vector[:4]]
    print(f"  e.g. {example}: support={entry.support_count}, vector[:4]={head}")

    full, report = propagate_full_coverage(store, inv)
    print("\nafter propagation:")
    for stage in ("annotated", "synset", "hypernym", "lexname", "uncovered"):
        print(f"  {stage:10s} {getattr(report, stage)}")
    assert report.uncovered == 0, "every sense is covered"

    # an unannotated synonym picks up its synset's annotated average
    synonym = next(k for k in full.sorted_keys()
                   if full.entries[k].provenance == "synset")
    head = [round(float(x), 3) for x in full.entries[synonym].vector[:4]]
    print(f"\nsynset-stage example: {synonym} -> {head}")
