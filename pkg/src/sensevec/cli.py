"""Batch pipeline driver: one subcommand per stage.

Every subcommand reads its inputs from flags, falling back to a shared
JSON config file, writes its primary outputs to files, and prints a
machine-readable run summary to stdout (logs go to stderr). Outputs are
pure functions of the declared inputs; only summary timings vary
between identical runs. Errors exit 1 with a structured JSON object
naming the failing module error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Optional

from . import corpus as corpus_mod
from . import gloss as gloss_mod
from . import propagation, wic, wsd
from .errors import GoldCountMismatch, SensevecError
from .inventory import build_inventory

log = logging.getLogger("sensevec")

_REQUIRED = object()


class ConfigError(SensevecError):
    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key


def _missing_setting(key: str) -> ConfigError:
    return ConfigError(f"missing required setting {key!r} "
                       "(pass the flag or set it in --config)", key)


def _load_config(path: Optional[str]) -> dict:
    if path is None:
        return {}
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    return cfg


def _resolve(args, key: str, default=_REQUIRED):
    value = getattr(args, key, None)
    if value is None:
        value = args._config.get(key)
    if value is None:
        if default is _REQUIRED:
            raise _missing_setting(key)
        return default
    return value


def _parse_feature_set(value) -> list[int]:
    if isinstance(value, str):
        value = [v for v in value.replace(",", " ").split() if v]
    return [int(v) for v in value]


def _counted(iterable, counter: dict, key: str):
    for item in iterable:
        counter[key] = counter.get(key, 0) + 1
        yield item


# --- stage handlers ---------------------------------------------------------

def cmd_build_inventory(args) -> dict:
    inv = build_inventory(_resolve(args, "wordnet_dir"))
    return {"synsets": inv.num_synsets, "senses": inv.num_senses,
            "lemma_pos_pairs": len(inv.lemma_pos_index)}


def cmd_bootstrap(args) -> dict:
    counts: dict[str, int] = {}
    with open(_resolve(args, "corpus_path"), encoding="utf-8") as fh:
        sentences = _counted(corpus_mod.load_annotated_corpus(fh), counts, "sentences")
        store = corpus_mod.bootstrap_sense_embeddings(sentences)
    out = _resolve(args, "annotated_store_path")
    corpus_mod.save_store_path(store, out)
    return {"sentences": counts.get("sentences", 0), "senses": len(store),
            "dim": store.dimension, "annotated_store_path": out}


def cmd_propagate(args) -> dict:
    inv = build_inventory(_resolve(args, "wordnet_dir"))
    store = corpus_mod.load_store_path(_resolve(args, "annotated_store_path"))
    full, report = propagation.propagate_full_coverage(store, inv)
    out = _resolve(args, "propagated_store_path")
    corpus_mod.save_store_path(full, out)
    report_path = _resolve(args, "coverage_report_path", default=None)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return {"entries": len(full), "propagated_store_path": out,
            "coverage": report.to_dict()}


def cmd_gloss_plan(args) -> dict:
    inv = build_inventory(_resolve(args, "wordnet_dir"))
    out = _resolve(args, "gloss_plans_path")
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        n = gloss_mod.write_gloss_plans(gloss_mod.iter_gloss_token_plans(inv), fh)
    return {"plans": n, "gloss_plans_path": out}


def cmd_gloss_merge(args) -> dict:
    sense_store = corpus_mod.load_store_path(_resolve(args, "propagated_store_path"))
    with open(_resolve(args, "gloss_embeddings_path"), encoding="utf-8") as fh:
        gloss_store = gloss_mod.gloss_store_from_corpus(
            corpus_mod.load_annotated_corpus(fh))
    merged = gloss_mod.merge_concat(sense_store, gloss_store)
    out = _resolve(args, "concat_store_path")
    corpus_mod.save_store_path(merged, out)
    return {"entries": len(merged), "dim": merged.dimension,
            "concat_store_path": out}


def _build_index(args) -> wsd.SenseIndex:
    inv = build_inventory(_resolve(args, "wordnet_dir"))
    store = corpus_mod.load_store_path(_resolve(args, "store_path"))
    return wsd.SenseIndex(store, inv,
                          match_mode=_resolve(args, "match_mode", "lemma_pos"),
                          fallback=_resolve(args, "fallback", "first_sense"))


def cmd_disambiguate(args) -> dict:
    idx = _build_index(args)
    select = None
    if _resolve(args, "targets", "annotated") == "all":
        select = lambda tok: tok.vector is not None  # noqa: E731
    top_k_value = _resolve(args, "top_k", default=None)
    top_k = int(top_k_value) if top_k_value is not None and int(top_k_value) > 0 \
        else None
    workers = int(_resolve(args, "workers", 1))
    out = _resolve(args, "disambiguation_path")
    counts = {"records": 0, "errors": 0}
    with open(_resolve(args, "corpus_path"), encoding="utf-8") as fh, \
            open(out, "w", encoding="utf-8", newline="\n") as out_fh:
        for record in wsd.disambiguate_batch(
                idx, corpus_mod.load_annotated_corpus(fh), select, workers):
            out_fh.write(json.dumps(record.to_dict(top_k)) + "\n")
            counts["records"] += 1
            if record.error is not None:
                counts["errors"] += 1
    return {**counts, "match_mode": idx.match_mode,
            "index_size": len(idx.keys), "disambiguation_path": out}


def cmd_wic_features(args) -> dict:
    idx = _build_index(args)
    sim34 = _resolve(args, "sim34_variant", "within")
    sim2_space = _resolve(args, "sim2_space", "native")
    with open(_resolve(args, "wic_data_path"), encoding="utf-8") as data_fh, \
            open(_resolve(args, "wic_embeddings_path"), encoding="utf-8") as emb_fh:
        instances = wic.load_wic_dataset(data_fh, embeddings_reader=emb_fh)
    rows = [(inst.instance_id,
             wic.compute_similarities(inst, idx, sim34, sim2_space))
            for inst in instances]
    out = _resolve(args, "wic_features_path")
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        n = wic.write_features(rows, fh)
    return {"instances": n, "match_mode": idx.match_mode,
            "sim34_variant": sim34, "sim2_space": sim2_space,
            "wic_features_path": out}


def _read_gold(path) -> list[bool]:
    with open(path, encoding="utf-8") as fh:
        return [line.strip() == "T" for line in fh if line.strip()]


def cmd_wic_train(args) -> dict:
    rows = _read_feature_rows(args)
    feature_set = _parse_feature_set(_resolve(args, "feature_set"))
    lam_value = getattr(args, "lambda_", None)
    if lam_value is None:
        lam_value = args._config.get("lambda", 1.0)
    lam = float(lam_value)
    if feature_set:
        golds = _read_gold(_resolve(args, "wic_gold_path"))
        if len(golds) != len(rows):
            raise GoldCountMismatch(len(rows), len(golds))
        model = wic.train_logreg(
            rows, golds, feature_set,
            regularization_strength=lam,
            tol=float(_resolve(args, "tol", 1e-6)),
            max_iter=int(_resolve(args, "max_iter", 10000)))
    else:
        model = wic.sense_match_model(lam)
    out = _resolve(args, "wic_model_path")
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(model.to_json() + "\n")
    return {"instances": len(rows), "feature_set": list(model.feature_set),
            "training_meta": model.training_meta, "wic_model_path": out}


def _read_feature_rows(args) -> list[dict]:
    with open(_resolve(args, "wic_features_path"), encoding="utf-8") as fh:
        return wic.read_features(fh)


def cmd_wic_predict(args) -> dict:
    with open(_resolve(args, "wic_model_path"), encoding="utf-8") as fh:
        model = wic.load_model(fh)
    rows = _read_feature_rows(args)
    out = _resolve(args, "wic_predictions_path")
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        n = wic.write_predictions(
            ((row["instance_id"], *wic.predict(model, row)) for row in rows), fh)
    return {"predictions": n, "feature_set": list(model.feature_set),
            "wic_predictions_path": out}


def cmd_wic_eval(args) -> dict:
    with open(_resolve(args, "wic_predictions_path"), encoding="utf-8") as fh:
        predictions = wic.read_predictions(fh)
    golds = _read_gold(_resolve(args, "wic_gold_path"))
    report = wic.evaluate([(p, label) for _, p, label in predictions], golds)
    report_path = _resolve(args, "wic_report_path", default=None)
    if report_path:
        with open(report_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.to_json() + "\n")
    return {"instances": len(predictions), "report": report.to_dict()}


# --- argument wiring --------------------------------------------------------

_STAGES = [
    ("build-inventory", "cmd_build_inventory", cmd_build_inventory,
     ["wordnet_dir"]),
    ("bootstrap", "cmd_bootstrap", cmd_bootstrap,
     ["corpus_path", "annotated_store_path"]),
    ("propagate", "cmd_propagate", cmd_propagate,
     ["wordnet_dir", "annotated_store_path", "propagated_store_path",
      "coverage_report_path"]),
    ("gloss-plan", "cmd_gloss_plan", cmd_gloss_plan,
     ["wordnet_dir", "gloss_plans_path"]),
    ("gloss-merge", "cmd_gloss_merge", cmd_gloss_merge,
     ["propagated_store_path", "gloss_embeddings_path", "concat_store_path"]),
    ("disambiguate", "cmd_disambiguate", cmd_disambiguate,
     ["wordnet_dir", "store_path", "corpus_path", "disambiguation_path",
      "match_mode", "fallback", "targets", "top_k", "workers"]),
    ("wic-features", "cmd_wic_features", cmd_wic_features,
     ["wordnet_dir", "store_path", "wic_data_path", "wic_embeddings_path",
      "wic_features_path", "match_mode", "fallback", "sim34_variant",
      "sim2_space"]),
    ("wic-train", "cmd_wic_train", cmd_wic_train,
     ["wic_features_path", "wic_gold_path", "wic_model_path", "feature_set",
      "lambda_", "tol", "max_iter"]),
    ("wic-predict", "cmd_wic_predict", cmd_wic_predict,
     ["wic_model_path", "wic_features_path", "wic_predictions_path"]),
    ("wic-eval", "cmd_wic_eval", cmd_wic_eval,
     ["wic_predictions_path", "wic_gold_path", "wic_report_path"]),
]

_FLAG_NAMES = {
    "lambda_": "--lambda",
    "top_k": "--top-k",
    "max_iter": "--max-iter",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sensevec",
        description="Sense-embedding pipeline: WordNet inventory, bootstrap, "
                    "propagation, gloss merge, disambiguation and WiC.")
    parser.add_argument("--verbose", action="store_true",
                        help="log at INFO level on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, alias, handler, keys in _STAGES:
        p = sub.add_parser(name, aliases=[alias],
                           help=handler.__doc__ or name)
        p.add_argument("--config", help="JSON config file with shared settings")
        for key in keys:
            flag = _FLAG_NAMES.get(key, "--" + key.replace("_", "-"))
            p.add_argument(flag, dest=key)
        p.set_defaults(_handler=handler, _command=name)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    started = time.perf_counter()
    try:
        args._config = _load_config(getattr(args, "config", None))
        summary = args._handler(args)
    except SensevecError as exc:
        json.dump({"error": {"type": type(exc).__name__, "message": str(exc)}},
                  sys.stderr)
        sys.stderr.write("\n")
        return 1
    except OSError as exc:
        json.dump({"error": {"type": type(exc).__name__, "message": str(exc)}},
                  sys.stderr)
        sys.stderr.write("\n")
        return 1
    summary = {"command": args._command,
               "elapsed_s": round(time.perf_counter() - started, 6),
               **summary}
    json.dump(summary, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
