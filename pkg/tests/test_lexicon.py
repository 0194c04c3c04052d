import pytest

from clfinfo.lexicon import (
    LexiconError,
    LexiconStats,
    load_dictionary,
    load_dictionary_file,
    load_supersenses,
    load_supersenses_file,
    load_synsets_file,
    map_to_supersenses,
    map_to_synsets,
    normalize_gloss,
    parse_cedict,
)


class TestGlossNormalization:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            ("(a) donkey", "donkey"),
            ("to walk", "walk"),
            ("the issue", "issue"),
            ("old (of people)", "old"),
            ("Horse", "horse"),
            ("time (frequency)", "time"),
            ("to go to work", "go to work"),
            ("(modal particle)", ""),
            ("a   spaced   out   gloss", "spaced out gloss"),
            ("theatre", "theatre"),
        ],
    )
    def test_normalization_rules(self, raw, expected):
        assert normalize_gloss(raw) == expected


class TestCedictParsing:
    def test_minimal_line_maps_both_scripts(self):
        got = load_dictionary(["馬 马 [ma3] /horse/\n"])
        assert got == {"馬": frozenset({"horse"}), "马": frozenset({"horse"})}

    def test_multi_gloss_line(self):
        got = load_dictionary(["羊 羊 [yang2] /sheep/goat/\n"])
        assert got["羊"] == frozenset({"sheep", "goat"})

    def test_malformed_lines_counted_and_skipped(self):
        stats = LexiconStats()
        got = load_dictionary(
            ["not a dictionary line\n", "字 字 [zi4] no slashes\n",
             "馬 马 [ma3] /horse/\n"],
            stats=stats,
        )
        assert stats.dictionary_lines_skipped == 2
        assert set(got) == {"馬", "马"}

    def test_comments_ignored(self):
        assert load_dictionary(["# header\n", "#! version=1\n"]) == {}

    def test_entry_fields_preserved(self):
        (entry,) = parse_cedict(["人士 人士 [ren2 shi4] /person/public figure/\n"])
        assert entry.pinyin == "ren2 shi4"
        assert entry.glosses == ("person", "public figure")

    def test_fixture_matches_hand_built_expectations(self, data_dir):
        stats = LexiconStats()
        got = load_dictionary_file(data_dir / "cedict_fixture.txt", stats=stats)
        assert stats.dictionary_lines_skipped == 2
        assert len(got) == 65
        assert got["马"] == frozenset({"horse", "cl:匹[pi3]"})
        assert got["馬"] == got["马"]
        assert got["驴"] == frozenset({"donkey"})
        assert got["人士"] == frozenset({"person", "public figure"})
        assert got["工作"] == frozenset({"work", "job"})
        assert got["问题"] == frozenset({"question", "problem", "issue"})
        assert got["老"] == frozenset({"old"})
        assert got["机会"] == frozenset({"opportunity", "chance", "occasion"})
        assert got["次"] == frozenset({"time"})
        assert "了" not in got  # only gloss normalizes away
        assert "空" not in got  # empty gloss list
        assert "BADLINE" not in got


class TestInventories:
    def test_categories_are_sorted_unique(self):
        inv = load_supersenses(
            ["horse\tanimal\n", "apple\tfood\n", "apple\tplant\n", "dog\tanimal\n"],
            "noun",
        )
        assert inv.categories == ("animal", "food", "plant")
        assert inv.category_count == 3
        assert inv.lemma_map["apple"] == frozenset({"food", "plant"})

    def test_mapped_categories_subset_of_declared(self, data_dir):
        inv = load_supersenses_file(data_dir / "noun_supersenses.tsv", "noun")
        declared = set(inv.categories)
        for cats in inv.lemma_map.values():
            assert cats <= declared

    def test_bad_kind_rejected(self):
        with pytest.raises(LexiconError):
            load_supersenses(["a\tb\n"], "verb")

    def test_empty_inventory_rejected(self):
        with pytest.raises(LexiconError):
            load_supersenses(["# nothing here\n"], "noun")

    def test_bad_lines_counted(self):
        stats = LexiconStats()
        inv = load_supersenses(
            ["horse\tanimal\n", "justonefield\n", "\tanimal\n"], "noun", stats=stats
        )
        assert stats.inventory_lines_skipped == 2
        assert set(inv.lemma_map) == {"horse"}


@pytest.fixture(scope="module")
def lex(data_dir):
    return {
        "dict": load_dictionary_file(data_dir / "cedict_fixture.txt"),
        "nouns": load_supersenses_file(data_dir / "noun_supersenses.tsv", "noun"),
        "adjs": load_supersenses_file(
            data_dir / "adjective_supersenses.tsv", "adjective"
        ),
        "syns": load_synsets_file(data_dir / "synsets.tsv"),
    }


class TestMapping:
    def test_single_path(self, lex):
        assert map_to_supersenses("马", lex["dict"], lex["nouns"]) == frozenset(
            {"animal"}
        )

    def test_oov_lemma_gives_empty_set(self, lex):
        assert map_to_supersenses("张三", lex["dict"], lex["nouns"]) == frozenset()
        assert map_to_synsets("张三", lex["dict"], lex["syns"]) == frozenset()

    def test_multi_gloss_union(self, lex):
        # question -> communication, problem -> cognition, issue -> communication
        assert map_to_supersenses("问题", lex["dict"], lex["nouns"]) == frozenset(
            {"communication", "cognition"}
        )

    def test_multi_category_gloss(self, lex):
        assert map_to_supersenses("苹果", lex["dict"], lex["nouns"]) == frozenset(
            {"food", "plant"}
        )

    def test_final_token_fallback(self, lex):
        # "public figure" is not in the inventory but "figure" is
        assert "person" in map_to_supersenses("人士", lex["dict"], lex["nouns"])

    def test_adjective_mapping(self, lex):
        assert map_to_supersenses("大", lex["dict"], lex["adjs"]) == frozenset(
            {"spatial"}
        )
        assert map_to_supersenses("红", lex["dict"], lex["adjs"]) == frozenset(
            {"perception"}
        )

    def test_synsets_for_two_sense_gloss(self, lex):
        assert map_to_synsets("马", lex["dict"], lex["syns"]) == frozenset(
            {"horse.n.01", "knight.n.02"}
        )

    def test_synset_union_across_glosses(self, lex):
        # opportunity and chance share a synset; occasion adds one
        assert map_to_synsets("机会", lex["dict"], lex["syns"]) == frozenset(
            {"opportunity.n.01", "occasion.n.01"}
        )

    def test_mapping_is_pure_and_reproducible(self, lex, data_dir):
        again = load_supersenses_file(data_dir / "noun_supersenses.tsv", "noun")
        for lemma in ("马", "苹果", "问题", "工作"):
            assert map_to_supersenses(lemma, lex["dict"], lex["nouns"]) == (
                map_to_supersenses(lemma, lex["dict"], again)
            )

    def test_every_mapped_category_is_declared(self, lex):
        for lemma in lex["dict"]:
            got = map_to_supersenses(lemma, lex["dict"], lex["nouns"])
            assert got <= set(lex["nouns"].categories)
