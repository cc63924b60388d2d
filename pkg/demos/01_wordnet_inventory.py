"""
===============================
Parsing WordNet into an inventory
===============================

Builds a sense inventory from WordNet-format database files and walks
through lemma lookups. The files here are a small synthetic fixture
written in the exact wndb layout; point `build_inventory` at a real
WordNet 3.0 `dict/` directory for the full 117,659-synset inventory.
"""
import tempfile

from sensevec import build_inventory
from sensevec.synthetic import SynsetSpec, write_wordnet_fixture

specs = [
    SynsetSpec("n", ["entity"], "noun.Tops", "that which exists"),
    SynsetSpec("n", ["animal", "creature"], "noun.animal",
               "a living organism", [0]),
    SynsetSpec("n", ["cook"], "noun.person", "someone who prepares food", [0]),
    SynsetSpec("v", ["cook", "fix", "ready"], "verb.creation",
               "prepare for eating"),
    SynsetSpec("v", ["move"], "verb.motion", "change position"),
]

with tempfile.TemporaryDirectory() as wn_dir:
    info = write_wordnet_fixture(wn_dir, specs)
    inv = build_inventory(wn_dir)

    print(f"inventory: {inv.num_synsets} synsets, {inv.num_senses} senses")

    # "cook" is polysemous across POS: one noun sense, one verb sense
    print("\nsenses of 'cook' (any POS):")
    for key in inv.senses_for_lemma("cook"):
        synset = inv.synset_of(key)
        print(f"  {key:24s} {synset.id.pos}  lemmas={list(synset.lemmas)}"
              f"  gloss={synset.gloss!r}")

    print("\nverb senses only:", inv.senses_for_lemma("cook", "v"))
    print("first sense of (cook, v):", inv.first_sense("cook", "v"))

    # hypernym edges stay inside the inventory
    animal = inv.synset_of(info.key(1, "animal"))
    print("\nhypernyms of 'animal':",
          [str(h) for h in animal.hypernyms],
          "->", inv.synsets[animal.hypernyms[0]].lemmas)
