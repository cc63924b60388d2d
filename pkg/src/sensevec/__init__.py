"""Full-inventory sense embeddings, nearest-neighbor WSD and WiC decisions.

The pipeline bootstraps sense embeddings by averaging sense-annotated
contextual vectors, imputes every remaining WordNet sense through
synset/hypernym/lexname aggregation, merges in gloss-based dictionary
embeddings by normalized concatenation, disambiguates by 1-NN cosine
over lemma-matched candidates, and judges Word-in-Context pairs either
by comparing disambiguated senses or with a logistic regression over
similarity features.
"""

from .corpus import (
    AnnotatedSentence,
    AnnotatedToken,
    SenseEmbeddingStore,
    StoreEntry,
    bootstrap_sense_embeddings,
    load_annotated_corpus,
    load_store,
    save_store,
)
from .gloss import (
    GlossTokenPlan,
    build_dictionary_embedding,
    build_gloss_token_plan,
    merge_concat,
)
from .inventory import (
    SenseInventory,
    Synset,
    SynsetId,
    build_inventory,
    parse_data_file,
    parse_index_sense,
    parse_sense_key,
)
from .propagation import (
    CoverageReport,
    compute_hypernym_embeddings,
    compute_lexname_embeddings,
    compute_synset_embeddings,
    propagate_full_coverage,
)
from .vectorspace import (
    concat_sense,
    cosine,
    duplicate_contextual,
    l2_normalize,
    mean,
)
from .wic import (
    LogRegModel,
    SimilarityFeatures,
    WicInstance,
    classify_by_sense_match,
    compute_similarities,
    evaluate,
    load_wic_dataset,
    predict,
    train_logreg,
)
from .wsd import Disambiguation, SenseIndex, disambiguate, disambiguate_batch

__version__ = "0.1.0"

__all__ = [
    "AnnotatedSentence", "AnnotatedToken", "SenseEmbeddingStore", "StoreEntry",
    "bootstrap_sense_embeddings", "load_annotated_corpus", "load_store",
    "save_store", "GlossTokenPlan", "build_dictionary_embedding",
    "build_gloss_token_plan", "merge_concat", "SenseInventory", "Synset",
    "SynsetId", "build_inventory", "parse_data_file", "parse_index_sense",
    "parse_sense_key", "CoverageReport", "compute_hypernym_embeddings",
    "compute_lexname_embeddings", "compute_synset_embeddings",
    "propagate_full_coverage", "concat_sense", "cosine",
    "duplicate_contextual", "l2_normalize", "mean", "LogRegModel",
    "SimilarityFeatures", "WicInstance", "classify_by_sense_match",
    "compute_similarities", "evaluate", "load_wic_dataset", "predict",
    "train_logreg", "Disambiguation", "SenseIndex", "disambiguate",
    "disambiguate_batch",
]
