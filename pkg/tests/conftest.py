"""Shared fixtures: a hand-built 12-synset WordNet directory.

The fixture covers all five ss_types (n, v, a, r, s), six hypernym
edges, seven lexnames, a multiword lemma, a synonym pair and a lemma
that is polysemous across POS - enough structure for every parser and
lookup contract.
"""

import pytest

from sensevec.synthetic import SynsetSpec, write_wordnet_fixture

FIXTURE_SPECS = [
    SynsetSpec("n", ["entity"], "noun.Tops", "that which exists"),
    SynsetSpec("n", ["animal", "creature"], "noun.animal",
               "a living organism", [0]),
    SynsetSpec("n", ["cat"], "noun.animal", "a small feline", [1]),
    SynsetSpec("n", ["dog", "domestic_dog"], "noun.animal",
               "a canine companion", [1]),
    SynsetSpec("n", ["cake"], "noun.food", "a baked sweet", [0]),
    SynsetSpec("v", ["make", "create"], "verb.creation", "bring into being"),
    SynsetSpec("v", ["cook", "fix", "ready"], "verb.creation",
               "prepare for eating", [5]),
    SynsetSpec("v", ["move"], "verb.motion", "change position"),
    SynsetSpec("a", ["fast"], "adj.all", "acting quickly"),
    SynsetSpec("s", ["quick", "speedy"], "adj.all", "accomplished rapidly",
               head=("fast", 0)),
    SynsetSpec("r", ["quickly"], "adv.all", "with speed"),
    SynsetSpec("n", ["cook"], "noun.person", "someone who prepares food", [0]),
]


@pytest.fixture(scope="session")
def wordnet_fixture(tmp_path_factory):
    path = tmp_path_factory.mktemp("wn")
    info = write_wordnet_fixture(path, FIXTURE_SPECS)
    return path, info


@pytest.fixture(scope="session")
def inventory(wordnet_fixture):
    from sensevec.inventory import build_inventory
    path, _ = wordnet_fixture
    return build_inventory(path)


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.passed else "FAIL"
        print(f"\nACCEPTANCE {name}: {outcome}", flush=True)
