"""Word-in-Context classification over disambiguation similarities.

Two decision routes: comparing the disambiguated sense keys directly
(no training), and a logistic regression over up to four cosine
features:

    sim1  contextual(c1) vs contextual(c2), D-dim space
    sim2  matched sense embedding vs matched sense embedding, store space
    sim3  aligned c1 vs its own matched sense (cross variant: the other's)
    sim4  aligned c2 vs its own matched sense (cross variant: the other's)

The trainer minimizes mean negative log-likelihood plus an L2 penalty
lambda/(2n)*||w||^2 (bias unpenalized) by full-batch gradient descent
with backtracking line search - deterministic, so retraining always
lands on the same convex optimum.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping, Optional, Sequence

import numpy as np

from .corpus import AnnotatedSentence, AnnotatedToken, load_annotated_corpus
from .errors import (
    DegenerateLabels,
    EmptyInput,
    GoldCountMismatch,
    LengthMismatch,
    MalformedRow,
    MissingEmbedding,
    MissingFeature,
    NonFinite,
)
from .vectorspace import cosine, duplicate_contextual, split_halves
from .wsd import SenseIndex, disambiguate

WIC_POS = {"n": "n", "v": "v", "a": "a", "r": "r", "j": "a", "s": "a"}
FEATURE_IDS = (1, 2, 3, 4)


@dataclass(frozen=True)
class WicInstance:
    instance_id: str
    lemma: str
    pos: str
    index1: int
    index2: int
    sentence1: AnnotatedSentence
    sentence2: AnnotatedSentence
    gold: Optional[bool] = None


@dataclass(frozen=True)
class SimilarityFeatures:
    sim1: float
    sim2: float
    sim3: float
    sim4: float
    sense1: str
    sense2: str

    def value(self, feature: int) -> float:
        return (self.sim1, self.sim2, self.sim3, self.sim4)[feature - 1]


def _normalize_lemma(lemma: str) -> str:
    return lemma.strip().lower().replace(" ", "_")


def _bare_sentence(instance_id: str, side: int, text: str) -> AnnotatedSentence:
    tokens = tuple(AnnotatedToken(w, _normalize_lemma(w), None, None, None)
                   for w in text.split())
    return AnnotatedSentence(f"{instance_id}.s{side}", tokens)


def _attach_lemma(sentence: AnnotatedSentence, index: int, lemma: str,
                  pos: str) -> AnnotatedSentence:
    # the TSV's lemma/POS are authoritative for the target token
    tokens = list(sentence.tokens)
    old = tokens[index]
    tokens[index] = AnnotatedToken(old.text, lemma, pos, old.sense_key, old.vector)
    return AnnotatedSentence(sentence.sentence_id, tuple(tokens))


def load_wic_dataset(data_reader: Iterable[str],
                     gold_reader: Optional[Iterable[str]] = None,
                     embeddings_reader: Optional[Iterable[str]] = None
                     ) -> list[WicInstance]:
    """Parse the WiC TSV (plus optional gold file and embeddings JSONL).

    Rows are `target<TAB>pos<TAB>idx1-idx2<TAB>sentence1<TAB>sentence2`.
    Instance ids are the 0-based row index as a decimal string; the
    embeddings corpus keys sentences as `<id>.s1` / `<id>.s2`.
    """
    embedded: dict[str, AnnotatedSentence] = {}
    if embeddings_reader is not None:
        for sentence in load_annotated_corpus(embeddings_reader):
            embedded[sentence.sentence_id] = sentence

    golds: Optional[list[bool]] = None
    if gold_reader is not None:
        golds = []
        for line_no, line in enumerate(gold_reader, 1):
            label = line.strip()
            if not label:
                continue
            if label not in ("T", "F"):
                raise MalformedRow(line_no, f"gold label must be T or F, got {label!r}")
            golds.append(label == "T")

    instances: list[WicInstance] = []
    for line_no, line in enumerate(data_reader, 1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 5:
            raise MalformedRow(line_no, f"expected 5 tab-separated fields, got {len(fields)}")
        target, pos_raw, span, text1, text2 = fields
        lemma = _normalize_lemma(target)
        pos = WIC_POS.get(pos_raw.strip().lower())
        if not lemma or pos is None:
            raise MalformedRow(line_no, f"bad target/pos: {target!r} {pos_raw!r}")
        try:
            idx1_s, idx2_s = span.split("-")
            index1, index2 = int(idx1_s), int(idx2_s)
        except ValueError:
            raise MalformedRow(line_no, f"bad index pair {span!r}") from None

        instance_id = str(len(instances))
        if embedded:
            try:
                s1 = embedded[f"{instance_id}.s1"]
                s2 = embedded[f"{instance_id}.s2"]
            except KeyError as exc:
                raise MissingEmbedding(exc.args[0]) from None
        else:
            s1 = _bare_sentence(instance_id, 1, text1)
            s2 = _bare_sentence(instance_id, 2, text2)
        if not (0 <= index1 < len(s1.tokens) and 0 <= index2 < len(s2.tokens)):
            raise MalformedRow(line_no, f"target index out of range in {span!r}")
        s1 = _attach_lemma(s1, index1, lemma, pos)
        s2 = _attach_lemma(s2, index2, lemma, pos)
        instances.append(WicInstance(
            instance_id, lemma, pos, index1, index2, s1, s2, gold=None))

    if golds is not None:
        if len(golds) != len(instances):
            raise GoldCountMismatch(len(instances), len(golds))
        instances = [
            WicInstance(i.instance_id, i.lemma, i.pos, i.index1, i.index2,
                        i.sentence1, i.sentence2, gold=g)
            for i, g in zip(instances, golds)]
    return instances


def compute_similarities(inst: WicInstance, idx: SenseIndex,
                         sim34_variant: str = "within",
                         sim2_space: str = "native") -> SimilarityFeatures:
    """Disambiguate both target tokens and compute the four cosines.

    `sim34_variant="cross"` pairs each contextual vector with the other
    sentence's matched sense; `sim2_space="sense_half"` compares only
    the D-dim sense halves of a concatenated store.
    """
    if sim34_variant not in ("within", "cross"):
        raise ValueError(f"bad sim34_variant {sim34_variant!r}")
    if sim2_space not in ("native", "sense_half"):
        raise ValueError(f"bad sim2_space {sim2_space!r}")
    c1 = inst.sentence1.tokens[inst.index1].vector
    c2 = inst.sentence2.tokens[inst.index2].vector
    if c1 is None:
        raise MissingEmbedding(f"{inst.instance_id}.s1")
    if c2 is None:
        raise MissingEmbedding(f"{inst.instance_id}.s2")

    d1 = disambiguate(idx, c1, inst.lemma, inst.pos)
    d2 = disambiguate(idx, c2, inst.lemma, inst.pos)
    sense1, sense2 = d1.chosen, d2.chosen

    concat_store = idx.store.dimension == 2 * c1.size

    def aligned(c):
        return duplicate_contextual(c) if concat_store else c

    def sense_vec(key):
        return idx.store.vector(key) if key in idx.store else None

    v1, v2 = sense_vec(sense1), sense_vec(sense2)

    sim1 = cosine(c1, c2)
    if v1 is None or v2 is None:
        sim2 = 0.0
    elif sim2_space == "sense_half" and concat_store:
        sim2 = cosine(split_halves(v1)[0], split_halves(v2)[0])
    else:
        sim2 = cosine(v1, v2)

    left, right = (v1, v2) if sim34_variant == "within" else (v2, v1)
    sim3 = cosine(aligned(c1), left) if left is not None else 0.0
    sim4 = cosine(aligned(c2), right) if right is not None else 0.0
    return SimilarityFeatures(sim1, sim2, sim3, sim4, sense1, sense2)


def classify_by_sense_match(feat: SimilarityFeatures) -> bool:
    """Same-sense judgement: are the two disambiguated keys equal."""
    return feat.sense1 == feat.sense2


# --- logistic regression ---------------------------------------------------

@dataclass
class LogRegModel:
    feature_set: tuple[int, ...]
    weights: np.ndarray
    bias: float
    regularization_strength: float = 1.0
    training_meta: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({
            "feature_set": list(self.feature_set),
            "weights": [float(w) for w in self.weights],
            "bias": float(self.bias),
            "lambda": float(self.regularization_strength),
        })


def load_model(reader: IO[str]) -> LogRegModel:
    obj = json.load(reader)
    return LogRegModel(
        feature_set=tuple(int(f) for f in obj["feature_set"]),
        weights=np.asarray(obj["weights"], dtype=np.float64),
        bias=float(obj["bias"]),
        regularization_strength=float(obj.get("lambda", 1.0)),
    )


def sense_match_model(regularization_strength: float = 1.0) -> LogRegModel:
    """The no-training configuration: empty feature set marks sense matching."""
    return LogRegModel((), np.zeros(0), 0.0, regularization_strength)


def _validate_feature_set(feature_set: Iterable[int]) -> tuple[int, ...]:
    fs = tuple(sorted(set(int(f) for f in feature_set)))
    if any(f not in FEATURE_IDS for f in fs):
        raise ValueError(f"feature ids must be within {FEATURE_IDS}, got {fs}")
    return fs


def _feature_value(feat, feature: int) -> float:
    if isinstance(feat, SimilarityFeatures):
        return feat.value(feature)
    if isinstance(feat, Mapping):
        value = feat.get(f"sim{feature}")
        if value is None:
            raise MissingFeature(feature)
        return float(value)
    raise TypeError(f"cannot read features from {type(feat).__name__}")


def feature_matrix(features: Sequence, feature_set: Sequence[int]) -> np.ndarray:
    fs = _validate_feature_set(feature_set)
    return np.array([[_feature_value(f, j) for j in fs] for f in features],
                    dtype=np.float64)


def _objective(X: np.ndarray, y: np.ndarray, w: np.ndarray, b: float,
               lam: float) -> float:
    z = X @ w + b
    # mean NLL via the stable log(1+e^z) form
    nll = float(np.mean(np.logaddexp(0.0, z) - y * z))
    return nll + lam / (2.0 * len(y)) * float(w @ w)


def _gradient(X: np.ndarray, y: np.ndarray, w: np.ndarray, b: float,
              lam: float) -> tuple[np.ndarray, float]:
    n = len(y)
    p = _sigmoid(X @ w + b)
    residual = p - y
    grad_w = X.T @ residual / n + (lam / n) * w
    grad_b = float(np.mean(residual))
    return grad_w, grad_b


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def train_logreg(features: Sequence, labels: Sequence[bool],
                 feature_set: Iterable[int] = FEATURE_IDS,
                 regularization_strength: float = 1.0,
                 tol: float = 1e-6,
                 max_iter: int = 10000) -> LogRegModel:
    """Fit the L2-penalized logistic objective from w = 0, b = 0.

    Deterministic full-batch gradient descent with backtracking Armijo
    line search; stops when the gradient infinity-norm drops below
    `tol` or after `max_iter` iterations.
    """
    fs = _validate_feature_set(feature_set)
    if not fs:
        return sense_match_model(regularization_strength)
    if len(features) != len(labels):
        raise LengthMismatch(len(features), len(labels))
    if len(features) < 2:
        raise DegenerateLabels("need at least 2 training rows")
    y = np.array([1.0 if label else 0.0 for label in labels], dtype=np.float64)
    if y.min() == y.max():
        raise DegenerateLabels("training labels contain a single class")
    X = feature_matrix(features, fs)
    if not np.all(np.isfinite(X)):
        raise NonFinite("feature matrix has NaN or Inf")

    lam = float(regularization_strength)
    w = np.zeros(len(fs), dtype=np.float64)
    b = 0.0
    loss = _objective(X, y, w, b, lam)
    grad_norm = math.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        grad_w, grad_b = _gradient(X, y, w, b, lam)
        grad_norm = max(float(np.max(np.abs(grad_w))), abs(grad_b))
        if not math.isfinite(grad_norm) or not math.isfinite(loss):
            raise NonFinite("training diverged")
        if grad_norm < tol:
            iterations -= 1
            break
        sq = float(grad_w @ grad_w) + grad_b * grad_b
        step = 1.0
        for _ in range(60):
            cand_w = w - step * grad_w
            cand_b = b - step * grad_b
            cand_loss = _objective(X, y, cand_w, cand_b, lam)
            if cand_loss <= loss - 1e-4 * step * sq:
                break
            step *= 0.5
        else:
            break  # no descent step left: at numerical optimum
        w, b, loss = cand_w, cand_b, cand_loss

    return LogRegModel(fs, w, b, lam, training_meta={
        "iterations": iterations,
        "final_grad_norm": grad_norm,
        "final_loss": loss,
    })


def predict(model: LogRegModel, feat) -> tuple[float, bool]:
    """Probability of "same sense" and the thresholded label (0.5 -> True).

    The empty-feature-set model routes through sense comparison.
    """
    if not model.feature_set:
        if isinstance(feat, SimilarityFeatures):
            same = classify_by_sense_match(feat)
        else:
            sense1, sense2 = feat.get("sense1"), feat.get("sense2")
            if sense1 is None or sense2 is None:
                raise MissingFeature("sense keys required by the sense-match model")
            same = sense1 == sense2
        return (1.0 if same else 0.0), same
    x = np.array([_feature_value(feat, j) for j in model.feature_set],
                 dtype=np.float64)
    z = float(x @ model.weights + model.bias)
    prob = float(_sigmoid(np.array([z]))[0])
    return prob, prob >= 0.5


# --- evaluation -------------------------------------------------------------

HIST_BINS = 20


@dataclass
class EvalReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    tn: int
    fn: int
    fp_rate: float
    fn_rate: float
    roc: list[tuple[float, float, float]]
    auc: float
    prob_hist: dict[str, list[int]]

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "confusion": {"tp": self.tp, "fp": self.fp,
                          "tn": self.tn, "fn": self.fn},
            "fp_rate": self.fp_rate,
            "fn_rate": self.fn_rate,
            "roc": [[fpr, tpr, thr] for fpr, tpr, thr in self.roc],
            "auc": self.auc,
            "prob_hist": self.prob_hist,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _hist(probs: Iterable[float]) -> list[int]:
    bins = [0] * HIST_BINS
    for p in probs:
        bins[min(int(p * HIST_BINS), HIST_BINS - 1)] += 1
    return bins


def evaluate(predictions: Sequence[tuple[float, bool]],
             golds: Sequence[bool]) -> EvalReport:
    """Score same-sense predictions; positive class is gold T.

    False-positive and false-negative rates are fractions of all
    instances. ROC points are (FPR, TPR, threshold) at every distinct
    predicted probability, thresholds descending; AUC is the trapezoid
    area with (0,0) and (1,1) endpoints.
    """
    if not predictions:
        raise EmptyInput("no predictions to evaluate")
    if len(predictions) != len(golds):
        raise LengthMismatch(len(predictions), len(golds))
    n = len(golds)
    tp = fp = tn = fn = 0
    for (_, label), gold in zip(predictions, golds):
        if label and gold:
            tp += 1
        elif label and not gold:
            fp += 1
        elif not label and not gold:
            tn += 1
        else:
            fn += 1
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)

    probs = np.array([p for p, _ in predictions], dtype=np.float64)
    gold_arr = np.array(golds, dtype=bool)
    n_pos = int(gold_arr.sum())
    n_neg = n - n_pos
    roc: list[tuple[float, float, float]] = []
    for thr in sorted(set(probs.tolist()), reverse=True):
        predicted_pos = probs >= thr
        tpr = float((predicted_pos & gold_arr).sum() / n_pos) if n_pos else 0.0
        fpr = float((predicted_pos & ~gold_arr).sum() / n_neg) if n_neg else 0.0
        roc.append((fpr, tpr, thr))
    curve = [(0.0, 0.0)] + [(fpr, tpr) for fpr, tpr, _ in roc] + [(1.0, 1.0)]
    auc = 0.0
    for (x0, y0), (x1, y1) in zip(curve, curve[1:]):
        auc += (x1 - x0) * (y0 + y1) / 2.0

    return EvalReport(
        accuracy=(tp + tn) / n,
        precision=precision, recall=recall, f1=f1,
        tp=tp, fp=fp, tn=tn, fn=fn,
        fp_rate=fp / n, fn_rate=fn / n,
        roc=roc, auc=auc,
        prob_hist={"T": _hist(probs[gold_arr].tolist()),
                   "F": _hist(probs[~gold_arr].tolist())},
    )


# --- features / predictions file plumbing ----------------------------------

def write_features(rows: Iterable[tuple[str, SimilarityFeatures]],
                   writer: IO[str]) -> int:
    n = 0
    for instance_id, feat in rows:
        writer.write(json.dumps({
            "instance_id": instance_id,
            "sim1": feat.sim1, "sim2": feat.sim2,
            "sim3": feat.sim3, "sim4": feat.sim4,
            "sense1": feat.sense1, "sense2": feat.sense2,
        }) + "\n")
        n += 1
    return n


def read_features(reader: Iterable[str]) -> list[dict]:
    rows = []
    for line_no, line in enumerate(reader, 1):
        if not line.strip():
            continue
        try:
            rows.append(json.loads(line))
        except json.JSONDecodeError:
            raise MalformedRow(line_no, "bad features line") from None
    return rows


def write_predictions(rows: Iterable[tuple[str, float, bool]],
                      writer: IO[str]) -> int:
    n = 0
    for instance_id, prob, label in rows:
        writer.write(f"{instance_id}\t{format(prob, '.9g')}\t{'T' if label else 'F'}\n")
        n += 1
    return n


def read_predictions(reader: Iterable[str]) -> list[tuple[str, float, bool]]:
    rows = []
    for line_no, line in enumerate(reader, 1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 3 or fields[2] not in ("T", "F"):
            raise MalformedRow(line_no, "bad predictions line")
        rows.append((fields[0], float(fields[1]), fields[2] == "T"))
    return rows
