"""Exception types raised across the package.

Every error carries its identifying payload both in the message and as
attributes, so the CLI can emit structured error objects.
"""


class SensevecError(Exception):
    """Base class for all package errors."""


# --- vector primitives ---------------------------------------------------

class ZeroVector(SensevecError):
    """A vector with (near-)zero L2 norm where a direction is required."""


class DimensionMismatch(SensevecError):
    def __init__(self, message, line_no=None):
        super().__init__(message)
        self.line_no = line_no


class EmptyInput(SensevecError):
    """An operation that needs at least one element received none."""


# --- WordNet database parsing --------------------------------------------

class MalformedLine(SensevecError):
    def __init__(self, line_no, detail=""):
        super().__init__(f"malformed line {line_no}: {detail}")
        self.line_no = line_no


class BadSenseKey(SensevecError):
    def __init__(self, key, line_no=None):
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"unparseable sense key {key!r}{where}")
        self.key = key
        self.line_no = line_no


class DuplicateSenseKey(SensevecError):
    def __init__(self, key):
        super().__init__(f"duplicate sense key {key!r}")
        self.key = key


class MalformedRecord(SensevecError):
    def __init__(self, offset, detail=""):
        super().__init__(f"malformed data record at offset {offset}: {detail}")
        self.offset = offset


class UnknownLexFilenum(SensevecError):
    def __init__(self, lex_filenum):
        super().__init__(f"lex_filenum {lex_filenum} outside 0..44")
        self.lex_filenum = lex_filenum


class MissingFile(SensevecError):
    def __init__(self, name):
        super().__init__(f"required WordNet file missing: {name}")
        self.name = name


class DanglingSense(SensevecError):
    def __init__(self, key, synset_id):
        super().__init__(f"sense {key!r} points at absent synset {synset_id}")
        self.key = key
        self.synset_id = synset_id


class DanglingHypernym(SensevecError):
    def __init__(self, source, target):
        super().__init__(f"synset {source} has hypernym edge to absent synset {target}")
        self.source = source
        self.target = target


# --- corpus / store ------------------------------------------------------

class MalformedJson(SensevecError):
    def __init__(self, line_no, detail=""):
        super().__init__(f"bad corpus line {line_no}: {detail}")
        self.line_no = line_no


class NoAnnotations(SensevecError):
    """Corpus contained zero sense-annotated tokens."""


class MalformedHeader(SensevecError):
    """Store file header is not `<count> <dim>`."""


class MalformedEntry(SensevecError):
    def __init__(self, line_no, detail=""):
        super().__init__(f"bad store entry at line {line_no}: {detail}")
        self.line_no = line_no


class CountMismatch(SensevecError):
    def __init__(self, expected, actual):
        super().__init__(f"header declares {expected} entries, file has {actual}")
        self.expected = expected
        self.actual = actual


# --- propagation / gloss -------------------------------------------------

class NonAnnotatedInput(SensevecError):
    """Store passed to a stage that requires annotated provenance only."""


class UnknownSense(SensevecError):
    def __init__(self, key):
        super().__init__(f"sense key {key!r} not in inventory")
        self.key = key


class MissingGloss(SensevecError):
    def __init__(self, key):
        super().__init__(f"no gloss embedding for sense {key!r}")
        self.key = key


# --- disambiguation ------------------------------------------------------

class EmptyStore(SensevecError):
    """A sense index cannot be built over an empty embedding store."""


class NoCandidates(SensevecError):
    def __init__(self, lemma, pos=None):
        super().__init__(f"no candidate senses for lemma {lemma!r} pos {pos!r}")
        self.lemma = lemma
        self.pos = pos


class UnknownLemma(SensevecError):
    def __init__(self, lemma):
        super().__init__(f"lemma {lemma!r} absent from inventory")
        self.lemma = lemma


# --- word-in-context -----------------------------------------------------

class MalformedRow(SensevecError):
    def __init__(self, line_no, detail=""):
        super().__init__(f"bad WiC row {line_no}: {detail}")
        self.line_no = line_no


class GoldCountMismatch(SensevecError):
    def __init__(self, n_rows, n_gold):
        super().__init__(f"{n_rows} data rows but {n_gold} gold labels")
        self.n_rows = n_rows
        self.n_gold = n_gold


class MissingEmbedding(SensevecError):
    def __init__(self, key):
        super().__init__(f"no embedding for key {key!r}")
        self.key = key


class DegenerateLabels(SensevecError):
    """Training labels contain a single class."""


class NonFinite(SensevecError):
    """Optimization produced a non-finite loss or gradient."""


class MissingFeature(SensevecError):
    def __init__(self, feature):
        super().__init__(f"feature sim{feature} required by the model is absent")
        self.feature = feature


class LengthMismatch(SensevecError):
    def __init__(self, n_left, n_right):
        super().__init__(f"length mismatch: {n_left} vs {n_right}")
        self.n_left = n_left
        self.n_right = n_right
