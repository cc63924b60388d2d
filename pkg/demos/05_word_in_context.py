"""
===========================
Word-in-Context decisions
===========================

Runs the whole pipeline on a synthetic world, then decides same-sense /
different-sense judgements two ways: comparing disambiguated senses
directly (M0, no training) and with a logistic regression over the four
cosine similarity features (the trained models M1-M4).
"""
import tempfile
from pathlib import Path

from sensevec import (
    SenseIndex,
    build_inventory,
    classify_by_sense_match,
    compute_similarities,
    evaluate,
    load_wic_dataset,
    predict,
    propagate_full_coverage,
    train_logreg,
)
from sensevec.corpus import bootstrap_sense_embeddings, load_corpus_path
from sensevec.gloss import gloss_store_from_corpus, merge_concat
from sensevec.synthetic import ClusterWorld

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    world = ClusterWorld(dim=16, n_lemmas=8, noise=0.05, seed=21)
    world.write_wordnet(tmp / "wn")
    world.write_annotated_corpus(tmp / "corpus.jsonl")
    inv = build_inventory(tmp / "wn")
    world.write_gloss_corpus(tmp / "gloss.jsonl", inv)
    world.write_wic(tmp / "wic.tsv", tmp / "wic.gold", tmp / "emb.jsonl",
                    n_pairs=64)

    # bootstrap -> propagate -> gloss merge, all in memory
    store = bootstrap_sense_embeddings(load_corpus_path(tmp / "corpus.jsonl"))
    full, _ = propagate_full_coverage(store, inv)
    concat = merge_concat(full, gloss_store_from_corpus(
        load_corpus_path(tmp / "gloss.jsonl")))
    idx = SenseIndex(concat, inv)

    with open(tmp / "wic.tsv") as data, open(tmp / "wic.gold") as gold, \
            open(tmp / "emb.jsonl") as emb:
        instances = load_wic_dataset(data, gold, emb)
    features = [compute_similarities(inst, idx) for inst in instances]
    golds = [inst.gold for inst in instances]

    # M0: no training, just compare the disambiguated senses
    m0 = [(1.0 if classify_by_sense_match(f) else 0.0,
           classify_by_sense_match(f)) for f in features]
    print(f"M0 sense comparison accuracy: {evaluate(m0, golds).accuracy:.3f}")

    # trained models over growing feature sets
    train_f, train_y = features[: len(features) // 2], golds[: len(golds) // 2]
    test_f, test_y = features[len(features) // 2:], golds[len(golds) // 2:]
    for name, feature_set in (("M1", [1]), ("M2", [2]),
                              ("M3", [1, 2]), ("M4", [1, 2, 3, 4])):
        model = train_logreg(train_f, train_y, feature_set)
        predictions = [predict(model, f) for f in test_f]
        report = evaluate(predictions, test_y)
        print(f"{name} sim{feature_set}: accuracy={report.accuracy:.3f} "
              f"P={report.precision:.2f} R={report.recall:.2f} "
              f"F1={report.f1:.2f} AUC={report.auc:.3f}")
