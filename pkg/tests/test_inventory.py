"""WordNet parser and sense-inventory contracts on the 12-synset fixture."""

import io

import pytest

from sensevec.errors import (
    BadSenseKey,
    DanglingSense,
    DuplicateSenseKey,
    MalformedLine,
    MalformedRecord,
    MissingFile,
    UnknownLexFilenum,
)
from sensevec.inventory import (
    LEXNAMES,
    SynsetId,
    build_inventory,
    lookup_pos,
    parse_data_file,
    parse_index_sense,
    parse_sense_key,
)


class TestParseSenseKey:
    def test_verb_key(self):
        parsed = parse_sense_key("cook%2:41:00::")
        assert parsed.lemma == "cook"
        assert parsed.pos == "v"
        assert parsed.lex_filenum == 41

    def test_satellite_key_with_head(self):
        parsed = parse_sense_key("quick%5:00:00:fast:00")
        assert parsed.pos == "s"
        assert parsed.head_word == "fast"

    @pytest.mark.parametrize("raw", [
        "cook2:41:00::",          # no %
        "cook%2:41:00:",          # three colons
        "cook%2:41:00:::",        # five colons
        "cook%9:41:00::",         # bad ss_type digit
        "Cook%2:41:00::",         # uppercase lemma
        "co ok%2:41:00::",        # space in lemma
        "cook%2:xx:00::",         # non-integer filenum
    ])
    def test_rejects_malformed(self, raw):
        with pytest.raises(BadSenseKey):
            parse_sense_key(raw)


class TestParseIndexSense:
    def test_single_line(self):
        result = parse_index_sense(io.StringIO("cook%2:41:00:: 00909573 1 9\n"))
        assert result == {"cook%2:41:00::": SynsetId("v", 909573)}

    def test_empty_input(self):
        assert parse_index_sense(io.StringIO("")) == {}

    def test_duplicate_key(self):
        text = "cook%2:41:00:: 00909573 1 9\ncook%2:41:00:: 00909573 1 9\n"
        with pytest.raises(DuplicateSenseKey):
            parse_index_sense(io.StringIO(text))

    def test_wrong_field_count(self):
        with pytest.raises(MalformedLine) as err:
            parse_index_sense(io.StringIO("cook%2:41:00:: 00909573 1\n"))
        assert err.value.line_no == 1

    def test_bad_key_reports_line(self):
        with pytest.raises(BadSenseKey) as err:
            parse_index_sense(io.StringIO("ok%1:01:00:: 1 1 0\nbad 2 1 0\n"))
        assert err.value.line_no == 2

    def test_non_integer_offset(self):
        with pytest.raises(MalformedLine):
            parse_index_sense(io.StringIO("cook%2:41:00:: zzz 1 9\n"))


class TestParseDataFile:
    RECORD = ("00001740 05 n 02 animal 0 creature 1 002 "
              "@ 00001000 n 0000 ~ 00002000 n 0000 | a living organism\n")

    def test_hypernym_pointer_filter(self):
        (syn,) = parse_data_file(io.StringIO(self.RECORD), "n")
        assert syn.hypernyms == (SynsetId("n", 1000),)
        assert syn.lemmas == ("animal", "creature")
        assert syn.lexname == "noun.animal"
        assert syn.gloss == "a living organism"

    def test_two_hypernyms_counted(self):
        record = ("00000100 04 n 01 act 0 002 @ 00000200 n 0000 "
                  "@i 00000300 n 0000 | doing something\n")
        (syn,) = parse_data_file(io.StringIO(record), "n")
        assert len(syn.hypernyms) == 2

    def test_missing_gloss_separator(self):
        with pytest.raises(MalformedRecord):
            parse_data_file(io.StringIO("00000100 04 n 01 act 0 000\n"), "n")

    def test_preamble_skipped(self):
        text = "  1 Copyright preamble\n  2 more preamble\n" + self.RECORD
        assert len(parse_data_file(io.StringIO(text), "n")) == 1

    def test_unknown_lex_filenum(self):
        record = "00000100 45 n 01 act 0 000 | x\n"
        with pytest.raises(UnknownLexFilenum):
            parse_data_file(io.StringIO(record), "n")

    def test_verb_frames_ignored(self):
        record = ("00001740 36 v 01 make 0 001 @ 00000500 v 0000 "
                  "02 + 02 00 + 08 00 | bring into being\n")
        (syn,) = parse_data_file(io.StringIO(record), "v")
        assert syn.hypernyms == (SynsetId("v", 500),)

    def test_satellite_allowed_only_in_adj_file(self):
        record = "00000100 00 s 01 quick 0 000 | rapid\n"
        (syn,) = parse_data_file(io.StringIO(record), "a")
        assert syn.id.pos == "s"
        with pytest.raises(MalformedRecord):
            parse_data_file(io.StringIO(record), "n")

    def test_adjective_marker_stripped(self):
        record = "00000100 00 a 01 certain(p) 0 000 | sure\n"
        (syn,) = parse_data_file(io.StringIO(record), "a")
        assert syn.lemmas == ("certain",)

    def test_truncated_record(self):
        with pytest.raises(MalformedRecord):
            parse_data_file(io.StringIO("00000100 04 n 02 act 0 | x\n"), "n")


class TestBuildInventory:
    def test_counts(self, inventory):
        assert inventory.num_synsets == 12
        # one sense per (synset, lemma) pair
        assert inventory.num_senses == 18

    def test_missing_file(self, tmp_path):
        (tmp_path / "index.sense").write_text("")
        with pytest.raises(MissingFile) as err:
            build_inventory(tmp_path)
        assert err.value.name == "data.noun"

    def test_round_trip_invariant(self, inventory):
        for key in inventory.sense_to_synset:
            parsed = parse_sense_key(key)
            slot = inventory.lemma_pos_index[(parsed.lemma, lookup_pos(parsed.pos))]
            assert key in slot

    def test_lemma_index_is_inverse_image(self, inventory):
        # every indexed key's synset must list the lemma, and vice versa
        listed = set()
        for (lemma, pos), keys in inventory.lemma_pos_index.items():
            for key in keys:
                synset = inventory.synset_of(key)
                assert lemma in {l.lower() for l in synset.lemmas}
                assert lookup_pos(synset.id.pos) == pos
                listed.add(key)
        assert listed == set(inventory.sense_to_synset)

    def test_pos_consistency(self, inventory):
        for key, sid in inventory.sense_to_synset.items():
            assert parse_sense_key(key).pos == sid.pos

    def test_hypernym_closure(self, inventory):
        for synset in inventory.synsets.values():
            for hyp in synset.hypernyms:
                assert hyp in inventory.synsets

    def test_deterministic_rebuild(self, wordnet_fixture):
        path, _ = wordnet_fixture
        first = build_inventory(path)
        second = build_inventory(path)
        assert first.lemma_pos_index == second.lemma_pos_index
        assert list(first.sense_to_synset) == list(second.sense_to_synset)

    def test_dangling_sense(self, tmp_path, wordnet_fixture):
        src, _ = wordnet_fixture
        for name in ("data.noun", "data.verb", "data.adj", "data.adv"):
            (tmp_path / name).write_text((src / name).read_text())
        (tmp_path / "index.sense").write_text("ghost%1:03:00:: 99999999 1 0\n")
        with pytest.raises(DanglingSense):
            build_inventory(tmp_path)


class TestSensesForLemma:
    def test_pos_filtered(self, inventory, wordnet_fixture):
        _, info = wordnet_fixture
        keys = inventory.senses_for_lemma("cook", "v")
        assert info.key(6, "cook") in keys
        assert info.key(11, "cook") not in keys

    def test_unknown_lemma_empty(self, inventory):
        assert inventory.senses_for_lemma("zzzz_not_a_word", "n") == []

    def test_union_is_superset(self, inventory):
        assert set(inventory.senses_for_lemma("cook", "v")) <= \
            set(inventory.senses_for_lemma("cook"))
        assert set(inventory.senses_for_lemma("cook", "n")) <= \
            set(inventory.senses_for_lemma("cook"))

    def test_union_sorted(self, inventory):
        union = inventory.senses_for_lemma("cook")
        assert union == sorted(union)
        assert len(union) == 2

    def test_satellite_folds_into_adjective(self, inventory, wordnet_fixture):
        _, info = wordnet_fixture
        assert inventory.senses_for_lemma("quick", "a") == [info.key(9, "quick")]
        assert inventory.senses_for_lemma("quick", "s") == [info.key(9, "quick")]

    def test_multiword_lemma_indexed(self, inventory, wordnet_fixture):
        _, info = wordnet_fixture
        assert inventory.senses_for_lemma("domestic_dog", "n") == \
            [info.key(3, "domestic_dog")]

    def test_first_sense(self, inventory, wordnet_fixture):
        _, info = wordnet_fixture
        # fixture assigns sense numbers in spec order per (lemma, pos)
        assert inventory.first_sense("cook", "v") == info.key(6, "cook")
        assert inventory.first_sense("zzzz") is None


def test_lexname_table_has_45_entries():
    assert len(LEXNAMES) == 45
    assert LEXNAMES[0] == "adj.all"
    assert LEXNAMES[3] == "noun.Tops"
    assert LEXNAMES[41] == "verb.social"
    assert LEXNAMES[44] == "adj.ppl"
