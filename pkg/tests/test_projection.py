import numpy as np
import pytest

from clfinfo.counts import PairCount, TripleCount, normalize, read_counts_file
from clfinfo.infotheory import mutual_information
from clfinfo.projection import (
    ProjectionError,
    build_ca,
    build_ca_restricted,
    build_cn,
    build_cn_restricted,
    build_cs,
    expand_synsets,
    split_pairs_by_synset_coverage,
)

PAIRS = PairCount(
    entries={
        ("个", "人"): 4,
        ("位", "人士"): 2,
        ("匹", "马"): 2,
        ("只", "羊"): 1,
        ("只", "狗"): 1,
    }
)

MEMBERSHIP = {
    "人": frozenset({"person"}),
    "人士": frozenset({"person"}),
    "马": frozenset({"animal"}),
    "羊": frozenset({"animal"}),
    "狗": frozenset({"animal"}),
}


class TestBuildCn:
    def test_masses_are_count_fractions(self):
        aj = build_cn(PAIRS)
        assert aj.analysis == "noun"
        assert aj.observation_total == 10
        assert aj.joint.mass[("个", "人")] == pytest.approx(0.4, abs=1e-15)
        assert aj.joint.mass[("只", "狗")] == pytest.approx(0.1, abs=1e-15)

    def test_single_pair_type_is_point_mass_with_zero_mi(self):
        aj = build_cn(PairCount(entries={("个", "人"): 7}))
        assert aj.joint.mass == {("个", "人"): 1.0}
        assert mutual_information(aj.joint) == 0.0

    def test_empty_rejected(self):
        with pytest.raises(ProjectionError):
            build_cn(PairCount())

    def test_golden_counts_match_hand_normalization(self, data_dir):
        pairs = read_counts_file(data_dir / "golden20_pairs.tsv")
        aj = build_cn(pairs)
        assert aj.joint.mass[("个", "人")] == pytest.approx(4 / 19, abs=1e-15)
        assert aj.joint.mass[("位", "人士")] == pytest.approx(2 / 19, abs=1e-15)
        assert aj.joint.mass[("把", "刀")] == pytest.approx(1 / 19, abs=1e-15)


class TestBuildCa:
    def test_one_triple_is_point_mass(self):
        aj = build_ca(TripleCount(entries={("大", "个", "苹果"): 1}))
        assert aj.joint.mass == {("个", "大"): 1.0}

    def test_triples_differing_only_in_noun_share_cell(self):
        aj = build_ca(
            TripleCount(entries={("大", "个", "苹果"): 2, ("大", "个", "人"): 3})
        )
        assert aj.joint.mass == {("个", "大"): 1.0}
        assert aj.observation_total == 5

    def test_golden_triples(self, data_dir):
        triples = read_counts_file(data_dir / "golden20_triples.tsv")
        aj = build_ca(triples)
        assert aj.joint.mass[("个", "大")] == pytest.approx(1 / 5, abs=1e-15)
        assert aj.joint.mass[("位", "老")] == pytest.approx(1 / 5, abs=1e-15)
        assert aj.support_size == (3, 4)  # classifiers 个,条,位 x adjectives


class TestRestrictedBuilds:
    def test_all_covering_category_reproduces_unrestricted(self):
        membership = {noun: frozenset({"everything"}) for noun in MEMBERSHIP}
        full = build_cn(PAIRS)
        restricted = build_cn_restricted(PAIRS, "everything", membership)
        assert restricted.joint.mass == full.joint.mass
        assert mutual_information(restricted.joint) == mutual_information(full.joint)
        assert restricted.dropped_observations == 0

    def test_empty_category_returns_none(self):
        assert build_cn_restricted(PAIRS, "plant", MEMBERSHIP) is None

    def test_two_category_fixture_matches_manual_filtering(self):
        animal = build_cn_restricted(PAIRS, "animal", MEMBERSHIP)
        person = build_cn_restricted(PAIRS, "person", MEMBERSHIP)
        # animal sub-corpus: (匹,马):2 (只,羊):1 (只,狗):1 -> total 4
        assert animal.observation_total == 4
        assert animal.dropped_observations == 6
        assert animal.joint.mass[("匹", "马")] == pytest.approx(0.5, abs=1e-15)
        assert animal.joint.mass[("只", "羊")] == pytest.approx(0.25, abs=1e-15)
        # person sub-corpus: (个,人):4 (位,人士):2 -> total 6
        assert person.observation_total == 6
        assert person.joint.mass[("个", "人")] == pytest.approx(4 / 6, abs=1e-15)
        assert person.kept_mass + person.dropped_mass == pytest.approx(1.0, abs=1e-12)

    def test_restricted_support_is_subset(self):
        full = build_cn(PAIRS)
        animal = build_cn_restricted(PAIRS, "animal", MEMBERSHIP)
        assert set(animal.joint.row_labels) <= set(full.joint.row_labels)
        assert set(animal.joint.col_labels) <= set(full.joint.col_labels)
        assert set(animal.joint.mass) <= set(full.joint.mass)

    def test_adjective_restriction_filters_then_marginalizes(self):
        triples = TripleCount(
            entries={
                ("大", "个", "苹果"): 2,
                ("大", "条", "河"): 1,
                ("红", "个", "苹果"): 1,
            }
        )
        membership = {"大": frozenset({"spatial"}), "红": frozenset({"perception"})}
        spatial = build_ca_restricted(triples, "spatial", membership)
        assert spatial.observation_total == 3
        assert spatial.dropped_observations == 1
        assert spatial.joint.mass == {
            ("个", "大"): pytest.approx(2 / 3, abs=1e-15),
            ("条", "大"): pytest.approx(1 / 3, abs=1e-15),
        }
        assert build_ca_restricted(triples, "temporal", membership) is None


SYNSETS = {
    "马": frozenset({"horse.n.01", "knight.n.02"}),
    "羊": frozenset({"sheep.n.01"}),
    "狗": frozenset({"dog.n.01"}),
}


class TestSynsetExpansion:
    def test_two_synsets_split_mass_equally(self):
        pairs = PairCount(entries={("匹", "马"): 2, ("只", "羊"): 3})
        aj = build_cs(pairs, SYNSETS)
        # (匹,马) weight 2 splits into 1+1; total kept weight 5
        assert aj.joint.mass[("匹", "horse.n.01")] == pytest.approx(1 / 5, abs=1e-12)
        assert aj.joint.mass[("匹", "knight.n.02")] == pytest.approx(1 / 5, abs=1e-12)
        assert aj.joint.mass[("只", "sheep.n.01")] == pytest.approx(3 / 5, abs=1e-12)

    def test_mass_conserved(self):
        pairs = PairCount(entries={("匹", "马"): 5, ("只", "狗"): 2, ("个", "人"): 3})
        aj = build_cs(pairs, SYNSETS)  # 人 has no synsets -> dropped
        assert abs(float(np.sum(aj.joint.probs)) - 1.0) <= 1e-12
        assert aj.observation_total == 7
        assert aj.dropped_observations == 3
        assert aj.kept_mass + aj.dropped_mass == pytest.approx(1.0, abs=1e-12)

    def test_singleton_synsets_relabel_cn(self):
        pairs = PairCount(entries={("匹", "马"): 2, ("只", "羊"): 1, ("只", "狗"): 4})
        singleton = {
            "马": frozenset({"s-horse"}),
            "羊": frozenset({"s-sheep"}),
            "狗": frozenset({"s-dog"}),
        }
        i_cs = mutual_information(build_cs(pairs, singleton).joint)
        i_cn = mutual_information(build_cn(pairs).joint)
        assert i_cs == pytest.approx(i_cn, abs=1e-12)

    def test_shared_synset_merges_columns(self):
        pairs = PairCount(entries={("匹", "马"): 2, ("只", "羊"): 2})
        shared = {"马": frozenset({"beast.n.01"}), "羊": frozenset({"beast.n.01"})}
        aj = build_cs(pairs, shared)
        assert aj.joint.col_labels == ("beast.n.01",)
        assert aj.joint.mass[("匹", "beast.n.01")] == pytest.approx(0.5, abs=1e-12)
        assert mutual_information(aj.joint) == 0.0

    def test_manual_expansion_oracle(self):
        pairs = PairCount(entries={("个", "书"): 3, ("本", "书"): 1, ("个", "人"): 4})
        synmap = {
            "书": frozenset({"book.n.01", "script.n.01"}),
            "人": frozenset({"person.n.01"}),
        }
        aj = build_cs(pairs, synmap)
        # manual: (个,书)3 -> 1.5 to each of book/script; (本,书)1 -> 0.5 each;
        # (个,人)4 -> 4.0 to person; kept weight 8
        expected = {
            ("个", "book.n.01"): 1.5 / 8,
            ("个", "script.n.01"): 1.5 / 8,
            ("本", "book.n.01"): 0.5 / 8,
            ("本", "script.n.01"): 0.5 / 8,
            ("个", "person.n.01"): 4.0 / 8,
        }
        assert set(aj.joint.mass) == set(expected)
        for key, want in expected.items():
            assert aj.joint.mass[key] == pytest.approx(want, abs=1e-12)

    def test_all_synsetless_rejected(self):
        pairs = PairCount(entries={("个", "人"): 1})
        with pytest.raises(ProjectionError, match="impossible"):
            build_cs(pairs, {})

    def test_split_by_coverage(self):
        pairs = PairCount(entries={("匹", "马"): 5, ("个", "人"): 3})
        kept, dropped = split_pairs_by_synset_coverage(pairs, SYNSETS)
        assert kept.entries == {("匹", "马"): 5}
        assert dropped == 3

    def test_expand_requires_nonempty(self):
        with pytest.raises(ProjectionError):
            expand_synsets(PairCount(), SYNSETS)
