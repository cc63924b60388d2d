"""Deterministic synthetic fixtures: WordNet-format files and cluster data.

`write_wordnet_fixture` renders spec-conformant `index.sense` and
`data.*` files (correct byte offsets, preamble lines, pointers, verb
frames) from a compact synset description, so parser and pipeline
tests never need the real database.

`ClusterWorld` builds a small polysemous vocabulary where every sense
owns a unit cluster center; token "contextual embeddings" are the
center plus Gaussian noise. That stands in for the language model and
makes end-to-end accuracy separable by construction.
"""

from __future__ import annotations

import json
import os
import zlib
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .inventory import LEXNAMES, SynsetId, lookup_pos

POS_TO_SS_DIGIT = {"n": "1", "v": "2", "a": "3", "r": "4", "s": "5"}
POS_TO_FILE = {"n": "data.noun", "v": "data.verb", "a": "data.adj",
               "s": "data.adj", "r": "data.adv"}
_PREAMBLE = ("  1 This is synthetic fixture data generated for tests.\n"
             "  2 It follows the WordNet 3.0 database file layout.\n")


@dataclass
class SynsetSpec:
    pos: str
    lemmas: list[str]
    lexname: str
    gloss: str
    hypernyms: list[int] = field(default_factory=list)  # indices into the spec list
    head: Optional[tuple[str, int]] = None  # satellite head word/id for the sense key


@dataclass
class FixtureInfo:
    synset_ids: list[SynsetId]
    sense_keys: dict[tuple[int, str], str]  # (spec index, lemma) -> raw key

    def key(self, spec_index: int, lemma: str) -> str:
        return self.sense_keys[(spec_index, lemma)]

    def all_keys(self) -> list[str]:
        return sorted(self.sense_keys.values())


def _sense_key(spec: SynsetSpec, lemma: str, lex_id: int) -> str:
    digit = POS_TO_SS_DIGIT[spec.pos]
    filenum = LEXNAMES.index(spec.lexname)
    head_word, head_id = ("", "")
    if spec.pos == "s":
        if spec.head is None:
            raise ValueError("satellite synsets need a head word for their keys")
        head_word, head_id = spec.head[0], f"{spec.head[1]:02d}"
    return f"{lemma.lower()}%{digit}:{filenum:02d}:{lex_id:02d}:{head_word}:{head_id}"


def _render_record(spec: SynsetSpec, offset: int,
                   pointers: list[tuple[str, int, str]]) -> str:
    filenum = LEXNAMES.index(spec.lexname)
    words = " ".join(f"{lemma} {i:x}" for i, lemma in enumerate(spec.lemmas))
    ptrs = "".join(f" {sym} {tgt:08d} {pos} 0000" for sym, tgt, pos in pointers)
    frames = " 01 + 02 00" if spec.pos == "v" else ""
    return (f"{offset:08d} {filenum:02d} {spec.pos} {len(spec.lemmas):02x} "
            f"{words} {len(pointers):03d}{ptrs}{frames} | {spec.gloss}")


def write_wordnet_fixture(dirpath: str | os.PathLike,
                          specs: Sequence[SynsetSpec]) -> FixtureInfo:
    """Render the specs as a WordNet 3.0 directory; returns the id map."""
    dirpath = os.fspath(dirpath)
    os.makedirs(dirpath, exist_ok=True)
    by_file: dict[str, list[int]] = {f: [] for f in
                                     ("data.noun", "data.verb", "data.adj", "data.adv")}
    for i, spec in enumerate(specs):
        if spec.lexname not in LEXNAMES:
            raise ValueError(f"unknown lexname {spec.lexname!r}")
        by_file[POS_TO_FILE[spec.pos]].append(i)

    # hyponym backlinks make pointer lists realistic; the parser must skip them
    hyponyms: dict[int, list[int]] = {i: [] for i in range(len(specs))}
    for i, spec in enumerate(specs):
        for h in spec.hypernyms:
            hyponyms[h].append(i)

    def pointer_list(i: int, offsets: dict[int, int]) -> list[tuple[str, int, str]]:
        spec = specs[i]
        ptrs = [("@", offsets[h], specs[h].pos) for h in spec.hypernyms]
        ptrs += [("~", offsets[c], specs[c].pos) for c in hyponyms[i]]
        return ptrs

    # offsets are independent of the digits substituted (8-digit fixed width)
    offsets: dict[int, int] = {}
    zero = {i: 0 for i in range(len(specs))}
    for fname, members in by_file.items():
        cursor = len(_PREAMBLE.encode("utf-8"))
        for i in members:
            offsets[i] = cursor
            cursor += len(_render_record(specs[i], 0, pointer_list(i, zero))
                          .encode("utf-8")) + 1

    for fname, members in by_file.items():
        with open(os.path.join(dirpath, fname), "w", encoding="utf-8") as fh:
            fh.write(_PREAMBLE)
            for i in members:
                fh.write(_render_record(specs[i], offsets[i],
                                        pointer_list(i, offsets)) + "\n")

    sense_keys: dict[tuple[int, str], str] = {}
    index_lines: list[tuple[str, int, int]] = []
    sense_counter: dict[tuple[str, str], int] = {}
    for i, spec in enumerate(specs):
        for lex_id, lemma in enumerate(spec.lemmas):
            key = _sense_key(spec, lemma, lex_id)
            slot = (lemma.lower(), lookup_pos(spec.pos))
            sense_counter[slot] = sense_counter.get(slot, 0) + 1
            sense_keys[(i, lemma)] = key
            index_lines.append((key, offsets[i], sense_counter[slot]))
    with open(os.path.join(dirpath, "index.sense"), "w", encoding="utf-8") as fh:
        for key, offset, sense_no in sorted(index_lines):
            fh.write(f"{key} {offset:08d} {sense_no} 0\n")

    return FixtureInfo([SynsetId(s.pos, offsets[i]) for i, s in enumerate(specs)],
                       sense_keys)


# --- cluster world ----------------------------------------------------------

_FILLERS = ("the", "a", "of", "to", "and", "with", "some", "quite")


class ClusterWorld:
    """A tiny polysemous vocabulary with one unit cluster center per sense.

    Lemmas alternate between noun and verb and carry three senses each:
    the first two are annotated (and serve as Word-in-Context targets),
    the third stays unannotated and is imputed through the per-POS root
    synset (hypernym stage). Every fourth lemma's first synset also
    holds an unannotated synonym lemma (synset stage), and unannotated
    adjective/adverb synsets fall through to their lexname (lexname
    stage), so propagation reaches full coverage while exercising all
    three stages.

    Every write method derives its own RNG from `seed`, so outputs do
    not depend on the order the methods are called in.
    """

    def __init__(self, dim: int = 16, n_lemmas: int = 12,
                 noise: float = 0.05, seed: int = 7):
        self.dim = dim
        self.n_lemmas = n_lemmas
        self.noise = noise
        self.seed = seed

        self.specs: list[SynsetSpec] = []
        root_n = self._add(SynsetSpec("n", ["rootthing"], "noun.Tops",
                                      "the synthetic noun root"))
        root_v = self._add(SynsetSpec("v", ["rootact"], "verb.stative",
                                      "the synthetic verb root"))
        noun_lex = ("noun.animal", "noun.artifact", "noun.food")
        verb_lex = ("verb.motion", "verb.contact", "verb.creation")
        self.lemma_pos: dict[str, str] = {}
        # (spec index, lemma) per sense; resolved to raw keys by write_wordnet
        self._sense_slots: dict[str, list[tuple[int, str]]] = {}
        self._annotated_slots: list[tuple[int, str]] = [
            (root_n, "rootthing"), (root_v, "rootact")]
        for li in range(self.n_lemmas):
            lemma = f"lemma{li:02d}"
            pos = "n" if li % 2 == 0 else "v"
            root = root_n if pos == "n" else root_v
            lexnames = noun_lex if pos == "n" else verb_lex
            self.lemma_pos[lemma] = pos
            slots = []
            for si in range(3):
                lexname = lexnames[(li + si) % len(lexnames)]
                gloss = f"sense {si} of {lemma} in the synthetic world"
                lemmas = [lemma]
                if si == 0 and li % 4 == 0:
                    lemmas.append(f"{lemma}syn")
                idx = self._add(SynsetSpec(pos, lemmas, lexname, gloss, [root]))
                slots.append((idx, lemma))
                if si < 2:
                    self._annotated_slots.append((idx, lemma))
            self._sense_slots[lemma] = slots
        shiny = self._add(SynsetSpec("a", ["shiny"], "adj.all",
                                     "reflecting light in the synthetic world"))
        self._add(SynsetSpec("a", ["glossy"], "adj.all",
                             "smooth and lustrous in the synthetic world"))
        swiftly = self._add(SynsetSpec("r", ["swiftly"], "adv.all",
                                       "in a fast synthetic manner"))
        self._add(SynsetSpec("r", ["slowly"], "adv.all",
                             "in an unhurried synthetic manner"))
        self._annotated_slots += [(shiny, "shiny"), (swiftly, "swiftly")]

        self.info: Optional[FixtureInfo] = None
        self.centers: dict[str, np.ndarray] = {}
        self.lemma_keys: dict[str, list[str]] = {}

    def _add(self, spec: SynsetSpec) -> int:
        self.specs.append(spec)
        return len(self.specs) - 1

    def _rng(self, purpose: str) -> np.random.Generator:
        return np.random.default_rng(
            (self.seed, zlib.crc32(purpose.encode("utf-8"))))

    def write_wordnet(self, dirpath) -> FixtureInfo:
        self.info = write_wordnet_fixture(dirpath, self.specs)
        rng = self._rng("centers")
        for key in self.info.all_keys():
            vec = rng.normal(size=self.dim)
            self.centers[key] = (vec / np.linalg.norm(vec)).astype(np.float32)
        self.lemma_keys = {lemma: [self.info.key(i, lem) for i, lem in slots]
                           for lemma, slots in self._sense_slots.items()}
        return self.info

    def annotated_keys(self) -> list[str]:
        assert self.info is not None, "call write_wordnet first"
        return sorted(self.info.key(i, lem) for i, lem in self._annotated_slots)

    def _context_vector(self, key: str, rng: np.random.Generator) -> np.ndarray:
        return (self.centers[key]
                + rng.normal(scale=self.noise, size=self.dim)).astype(np.float32)

    def _filler_vector(self, word: str) -> np.ndarray:
        rng = np.random.default_rng(zlib.crc32(f"filler:{word}".encode("utf-8")))
        vec = rng.normal(size=self.dim)
        return (vec / np.linalg.norm(vec) * 0.5).astype(np.float32)

    def _sentence_obj(self, sentence_id: str, key: str, lemma: str, pos: str,
                      rng: np.random.Generator,
                      annotate: bool = True) -> tuple[dict, int]:
        n_before = int(rng.integers(1, 4))
        n_after = int(rng.integers(1, 3))
        fillers = [str(w) for w in rng.choice(_FILLERS, size=n_before + n_after)]
        tokens = []
        for w in fillers[:n_before]:
            tokens.append({"text": w, "lemma": w, "pos": None, "sense_key": None,
                           "vector": self._filler_vector(w).tolist()})
        tokens.append({"text": lemma, "lemma": lemma, "pos": pos,
                       "sense_key": key if annotate else None,
                       "vector": self._context_vector(key, rng).tolist()})
        for w in fillers[n_before:]:
            tokens.append({"text": w, "lemma": w, "pos": None, "sense_key": None,
                           "vector": self._filler_vector(w).tolist()})
        obj = {"sentence_id": sentence_id, "dim": self.dim, "tokens": tokens}
        return obj, n_before

    def write_annotated_corpus(self, path, occurrences: int = 4) -> int:
        """JSONL corpus annotating `annotated_keys()`, `occurrences` each."""
        rng = self._rng("corpus")
        n = 0
        with open(path, "w", encoding="utf-8") as fh:
            for key in self.annotated_keys():
                lemma = key.split("%", 1)[0]
                pos = self.lemma_pos.get(lemma, self._pos_of_key(key))
                for occ in range(occurrences):
                    obj, _ = self._sentence_obj(f"sent-{key}-{occ}", key, lemma,
                                                pos, rng)
                    fh.write(json.dumps(obj) + "\n")
                    n += 1
        return n

    @staticmethod
    def _pos_of_key(key: str) -> str:
        digit = key.split("%", 1)[1][0]
        return {"1": "n", "2": "v", "3": "a", "4": "r", "5": "a"}[digit]

    def write_gloss_corpus(self, path, inv) -> int:
        """Provider-shaped gloss vectors: every plan token near its sense center."""
        from .gloss import iter_gloss_token_plans
        rng = self._rng("gloss")
        n = 0
        with open(path, "w", encoding="utf-8") as fh:
            for plan in iter_gloss_token_plans(inv):
                tokens = [{"text": tok, "lemma": tok.lower(), "pos": None,
                           "sense_key": None,
                           "vector": self._context_vector(plan.sense_key,
                                                          rng).tolist()}
                          for tok in plan.tokens]
                fh.write(json.dumps({"sentence_id": plan.sense_key,
                                     "dim": self.dim, "tokens": tokens}) + "\n")
                n += 1
        return n

    def write_wic(self, data_path, gold_path, emb_path, n_pairs: int = 100) -> int:
        """Alternating same/different-sense pairs over the annotated senses."""
        assert self.lemma_keys, "call write_wordnet first"
        rng = self._rng("wic")
        lemmas = sorted(self.lemma_keys)
        with open(data_path, "w", encoding="utf-8") as data_fh, \
                open(gold_path, "w", encoding="utf-8") as gold_fh, \
                open(emb_path, "w", encoding="utf-8") as emb_fh:
            for i in range(n_pairs):
                lemma = lemmas[(i // 2) % len(lemmas)]
                pos = self.lemma_pos[lemma]
                same = i % 2 == 0
                key1 = self.lemma_keys[lemma][0]
                key2 = key1 if same else self.lemma_keys[lemma][1]
                rows = []
                for side, key in ((1, key1), (2, key2)):
                    obj, target_index = self._sentence_obj(
                        f"{i}.s{side}", key, lemma, pos, rng, annotate=False)
                    emb_fh.write(json.dumps(obj) + "\n")
                    rows.append((target_index,
                                 " ".join(t["text"] for t in obj["tokens"])))
                data_fh.write(f"{lemma}\t{pos.upper()}\t{rows[0][0]}-{rows[1][0]}\t"
                              f"{rows[0][1]}\t{rows[1][1]}\n")
                gold_fh.write("T\n" if same else "F\n")
        return n_pairs
