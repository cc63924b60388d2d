"""WordNet 3.0 database parsing into an immutable sense inventory.

Reads the standard wndb-format files (`index.sense`, `data.{noun,verb,
adj,adv}`). Only the pieces downstream modules need are kept: synset
membership, hypernym edges (`@` and `@i` pointers), lexicographer file
names and glosses. Verb frames, morphology and all other pointer types
are ignored.

Satellite adjectives (ss_type `s`) stay a distinct POS internally so
offsets resolve against the right data records, but fold into `a` for
lemma lookups.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    BadSenseKey,
    DanglingHypernym,
    DanglingSense,
    DuplicateSenseKey,
    MalformedLine,
    MalformedRecord,
    MissingFile,
    UnknownLexFilenum,
)

POS_TAGS = ("n", "v", "a", "r", "s")
LOOKUP_POS = ("n", "v", "a", "r")

SS_TYPE_TO_POS = {"1": "n", "2": "v", "3": "a", "4": "r", "5": "s"}

DATA_FILES = {"n": "data.noun", "v": "data.verb", "a": "data.adj", "r": "data.adv"}
REQUIRED_FILES = ("index.sense", "data.noun", "data.verb", "data.adj", "data.adv")

HYPERNYM_SYMBOLS = ("@", "@i")

# The 45 lexicographer files, indexed by lex_filenum.
LEXNAMES = (
    "adj.all", "adj.pert", "adv.all", "noun.Tops", "noun.act",
    "noun.animal", "noun.artifact", "noun.attribute", "noun.body",
    "noun.cognition", "noun.communication", "noun.event", "noun.feeling",
    "noun.food", "noun.group", "noun.location", "noun.motive",
    "noun.object", "noun.person", "noun.phenomenon", "noun.plant",
    "noun.possession", "noun.process", "noun.quantity", "noun.relation",
    "noun.shape", "noun.state", "noun.substance", "noun.time",
    "verb.body", "verb.change", "verb.cognition", "verb.communication",
    "verb.competition", "verb.consumption", "verb.contact",
    "verb.creation", "verb.emotion", "verb.motion", "verb.perception",
    "verb.possession", "verb.social", "verb.stative", "verb.weather",
    "adj.ppl",
)


def lookup_pos(pos: str) -> str:
    """POS as used for lemma lookup: satellites count as adjectives."""
    return "a" if pos == "s" else pos


class ParsedSenseKey(NamedTuple):
    raw: str
    lemma: str
    pos: str           # n/v/a/r/s, decoded from the ss_type digit
    lex_filenum: int
    lex_id: int
    head_word: str
    head_id: str


def parse_sense_key(raw: str) -> ParsedSenseKey:
    """Split a `lemma%ss_type:lex_filenum:lex_id:head_word:head_id` key.

    Raises BadSenseKey if the shape, the ss_type digit, or the lemma
    casing is wrong.
    """
    parts = raw.split("%")
    if len(parts) != 2:
        raise BadSenseKey(raw)
    lemma, lex_sense = parts
    fields = lex_sense.split(":")
    if len(fields) != 5:
        raise BadSenseKey(raw)
    ss_type, lex_filenum, lex_id, head_word, head_id = fields
    if ss_type not in SS_TYPE_TO_POS:
        raise BadSenseKey(raw)
    if not lemma or lemma != lemma.lower() or " " in lemma:
        raise BadSenseKey(raw)
    try:
        filenum = int(lex_filenum)
        lexid = int(lex_id)
    except ValueError:
        raise BadSenseKey(raw) from None
    return ParsedSenseKey(raw, lemma, SS_TYPE_TO_POS[ss_type],
                          filenum, lexid, head_word, head_id)


@dataclass(frozen=True, order=True)
class SynsetId:
    pos: str
    offset: int

    def __str__(self) -> str:
        return f"{self.offset:08d}-{self.pos}"


@dataclass(frozen=True)
class Synset:
    id: SynsetId
    lemmas: tuple[str, ...]
    lexname: str
    hypernyms: tuple[SynsetId, ...]
    gloss: str


class IndexSenseEntry(NamedTuple):
    key: str
    synset_id: SynsetId
    sense_number: int


def iter_index_sense(reader: Iterable[str]) -> Iterator[IndexSenseEntry]:
    """Yield `(key, synset_id, sense_number)` per index.sense line.

    Lines are `sense_key synset_offset sense_number tag_cnt`; blank
    lines are skipped. Duplicate detection is the caller's concern.
    """
    for line_no, line in enumerate(reader, 1):
        line = line.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 4:
            raise MalformedLine(line_no, f"expected 4 fields, got {len(fields)}")
        raw_key, offset_s, sense_no_s, tag_cnt_s = fields
        try:
            offset = int(offset_s)
            sense_number = int(sense_no_s)
            int(tag_cnt_s)
        except ValueError:
            raise MalformedLine(line_no, "non-integer numeric field") from None
        if offset < 0 or sense_number < 1:
            raise MalformedLine(line_no, "offset or sense_number out of range")
        try:
            key = parse_sense_key(raw_key)
        except BadSenseKey:
            raise BadSenseKey(raw_key, line_no) from None
        yield IndexSenseEntry(raw_key, SynsetId(key.pos, offset), sense_number)


def parse_index_sense(reader: Iterable[str]) -> dict[str, SynsetId]:
    """Map each sense key to its synset id; duplicates are an error."""
    result: dict[str, SynsetId] = {}
    for entry in iter_index_sense(reader):
        if entry.key in result:
            raise DuplicateSenseKey(entry.key)
        result[entry.key] = entry.synset_id
    return result


def _strip_marker(lemma: str) -> str:
    # adjective position markers: certain(p), a_cappella(a), ...
    if lemma.endswith(")") and "(" in lemma:
        return lemma[: lemma.rindex("(")]
    return lemma


def parse_data_file(reader: Iterable[str], pos: str) -> list[Synset]:
    """Parse one `data.{noun,verb,adj,adv}` stream.

    `pos` is the file's POS (n/v/a/r); records in data.adj may carry
    ss_type `a` or `s`. Copyright preamble lines start with two spaces.
    Record layout before the mandatory `|`:

        offset lex_filenum ss_type w_cnt (lemma lex_id){w_cnt}
        p_cnt (symbol offset pos source/target){p_cnt} [frames...]
    """
    if pos not in LOOKUP_POS:
        raise ValueError(f"pos must be one of {LOOKUP_POS}, got {pos!r}")
    allowed_ss = {"a", "s"} if pos == "a" else {pos}
    synsets: list[Synset] = []
    for line_no, line in enumerate(reader, 1):
        if line.startswith("  "):
            continue
        line = line.rstrip("\n")
        if not line.strip():
            continue
        head, sep, gloss = line.partition("|")
        toks = head.split()
        offset_label: object = toks[0] if toks else f"line {line_no}"
        try:
            offset = int(toks[0])
        except (IndexError, ValueError):
            raise MalformedRecord(offset_label, "unparseable offset field") from None
        if not sep:
            raise MalformedRecord(offset, "record has no gloss separator '|'")
        try:
            lex_filenum = int(toks[1])
            ss_type = toks[2]
            if ss_type not in allowed_ss:
                raise MalformedRecord(
                    offset, f"ss_type {ss_type!r} invalid in data.{pos} file")
            if not 0 <= lex_filenum <= 44:
                raise UnknownLexFilenum(lex_filenum)
            w_cnt = int(toks[3], 16)
            if w_cnt < 1:
                raise MalformedRecord(offset, "w_cnt must be >= 1")
            lemmas = []
            for i in range(w_cnt):
                word = _strip_marker(toks[4 + 2 * i])
                int(toks[5 + 2 * i], 16)  # lex_id, validated but unused
                lemmas.append(word)
            idx = 4 + 2 * w_cnt
            p_cnt = int(toks[idx])
            hypernyms = []
            for i in range(p_cnt):
                base = idx + 1 + 4 * i
                symbol = toks[base]
                ptr_offset = int(toks[base + 1])
                ptr_pos = toks[base + 2]
                if ptr_pos not in POS_TAGS:
                    raise MalformedRecord(offset, f"bad pointer pos {ptr_pos!r}")
                toks[base + 3]  # source/target hex field, unused
                if symbol in HYPERNYM_SYMBOLS:
                    hypernyms.append(SynsetId(ptr_pos, ptr_offset))
            # anything after the pointers (verb frames) is ignored
        except (MalformedRecord, UnknownLexFilenum):
            raise
        except (IndexError, ValueError):
            raise MalformedRecord(offset, "truncated or non-numeric field") from None
        synsets.append(Synset(
            id=SynsetId(ss_type, offset),
            lemmas=tuple(lemmas),
            lexname=LEXNAMES[lex_filenum],
            hypernyms=tuple(hypernyms),
            gloss=gloss.strip(),
        ))
    return synsets


class SenseInventory:
    """Immutable after build; safe to share across threads.

    `lemma_pos_index` keys use the lookup POS (satellites folded into
    `a`); sense lists are sorted ascending by raw key. `first_sense`
    tracks WordNet's lowest sense_number per (lemma, lookup POS) for
    the disambiguation fallback.
    """

    def __init__(self,
                 synsets: dict[SynsetId, Synset],
                 sense_to_synset: dict[str, SynsetId],
                 first_sense: dict[tuple[str, str], str],
                 first_rank: Optional[dict[tuple[str, str], int]] = None):
        self.synsets = synsets
        self.sense_to_synset = sense_to_synset
        index: dict[tuple[str, str], list[str]] = {}
        for raw in sense_to_synset:
            parsed = parse_sense_key(raw)
            index.setdefault((parsed.lemma, lookup_pos(parsed.pos)), []).append(raw)
        self.lemma_pos_index = {k: tuple(sorted(v)) for k, v in index.items()}
        self._first_sense = first_sense
        self._first_rank = first_rank if first_rank is not None else {
            slot: 1 for slot in first_sense}

    @property
    def num_synsets(self) -> int:
        return len(self.synsets)

    @property
    def num_senses(self) -> int:
        return len(self.sense_to_synset)

    def synset_of(self, key: str) -> Synset:
        return self.synsets[self.sense_to_synset[key]]

    def senses_for_lemma(self, lemma: str, pos: Optional[str] = None) -> list[str]:
        """Candidate sense keys for a normalized lemma, optionally POS-filtered.

        Unknown lemmas return an empty list; ordering is ascending
        lexicographic by raw key.
        """
        if pos is not None:
            return list(self.lemma_pos_index.get((lemma, lookup_pos(pos)), ()))
        merged: list[str] = []
        for p in LOOKUP_POS:
            merged.extend(self.lemma_pos_index.get((lemma, p), ()))
        return sorted(merged)

    def first_sense(self, lemma: str, pos: Optional[str] = None) -> Optional[str]:
        """WordNet first sense (lowest sense_number) for the fallback policy."""
        if pos is not None:
            return self._first_sense.get((lemma, lookup_pos(pos)))
        best = None
        for p in LOOKUP_POS:
            key = self._first_sense.get((lemma, p))
            if key is None:
                continue
            rank = self._first_rank[(lemma, p)]
            if best is None or (rank, key) < best[:2]:
                best = (rank, key, p)
        return best[1] if best else None


def build_inventory(wordnet_dir: str | os.PathLike) -> SenseInventory:
    """Parse a WordNet 3.0 directory and cross-link senses to synsets."""
    wordnet_dir = os.fspath(wordnet_dir)
    for name in REQUIRED_FILES:
        if not os.path.isfile(os.path.join(wordnet_dir, name)):
            raise MissingFile(name)

    synsets: dict[SynsetId, Synset] = {}
    for pos, fname in DATA_FILES.items():
        with open(os.path.join(wordnet_dir, fname), encoding="utf-8") as fh:
            for syn in parse_data_file(fh, pos):
                if syn.id in synsets:
                    raise MalformedRecord(syn.id.offset, "duplicate synset id")
                synsets[syn.id] = syn

    for syn in synsets.values():
        for hyp in syn.hypernyms:
            if hyp not in synsets:
                raise DanglingHypernym(syn.id, hyp)

    sense_to_synset: dict[str, SynsetId] = {}
    first_sense: dict[tuple[str, str], str] = {}
    first_rank: dict[tuple[str, str], int] = {}
    with open(os.path.join(wordnet_dir, "index.sense"), encoding="utf-8") as fh:
        for entry in iter_index_sense(fh):
            if entry.key in sense_to_synset:
                raise DuplicateSenseKey(entry.key)
            if entry.synset_id not in synsets:
                raise DanglingSense(entry.key, entry.synset_id)
            sense_to_synset[entry.key] = entry.synset_id
            parsed = parse_sense_key(entry.key)
            slot = (parsed.lemma, lookup_pos(parsed.pos))
            rank = (entry.sense_number, entry.key)
            if slot not in first_rank or rank < (first_rank[slot], first_sense[slot]):
                first_rank[slot] = entry.sense_number
                first_sense[slot] = entry.key

    return SenseInventory(synsets, sense_to_synset, first_sense, first_rank)
