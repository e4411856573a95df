from __future__ import annotations

import json

import pytest

from locsep.groups import GensetError, SpecError, parse_group_spec
from locsep.harness import (CorpusEntry, all_pair_gensets, analyze, canonical_json, default_corpus, evaluate_entry,
                            girth_search, inverse_classes, load_corpus, parse_genset, run_lemma_suite,
                            run_theorem_corpus, verify_report)


def test_parse_genset_forms():
    g = parse_group_spec("product:cyclic:12,cyclic:2")
    std = parse_genset(g, "standard")
    assert len(std.gensets) == 1 and not std.exhaustive
    ex = parse_genset(g, "explicit:[(g^1,g^0),(g^0,g^1)]")
    assert set(ex.gensets[0]) == set(std.gensets[0])
    assert set(parse_genset(g, "explicit:[2,1]").gensets[0]) == set(std.gensets[0])
    with pytest.raises(SpecError):
        parse_genset(g, "explicit:(g^1,g^0)")
    with pytest.raises(SpecError):
        parse_genset(g, "explicit:[nonsense]")
    with pytest.raises(SpecError):
        parse_genset(g, "random:3")
    with pytest.raises(GensetError):
        parse_genset(g, "explicit:[(g^2,g^0)]")


def test_all_pairs_counts():
    g = parse_group_spec("cyclic:6")
    assert len(inverse_classes(g)) == 3  # {1,5}, {2,4}, {3}
    sets = all_pair_gensets(g, 2)
    assert all(len(g.closure(s)) == 6 for s in sets)
    # {1,5} alone, {1,5} with another class, and {2,4} with {3}
    assert len(sets) == 4
    choice = parse_genset(g, "all-pairs:3")
    assert choice.exhaustive and len(choice.gensets) == 5
    assert not parse_genset(g, "all-pairs:2").exhaustive


def test_evaluate_positive_and_negative_entries():
    pos = evaluate_entry(CorpusEntry("cyclic:21"), windows=False)
    assert pos["statement2"]["verdict"] == "true" and pos["statement3"]["decomposition"] == [21, 1]
    assert pos["agreement"] == "agree"
    neg = evaluate_entry(CorpusEntry("product:cyclic:5,cyclic:5", "all-pairs:2"), windows=False)
    assert neg["statement2"]["verdict"] == "false-on-tested-sets" and neg["agreement"] == "agree"
    assert "generating-set search not exhaustive" in neg["flags"]
    small = evaluate_entry(CorpusEntry("cyclic:12"), windows=False)
    assert small["statement2"]["verdict"] == "false" and not small["statement3"]["value"]
    a5 = evaluate_entry(CorpusEntry("alternating:5"), windows=False)
    assert a5["agreement"] == "not applicable"


def test_report_is_deterministic_modulo_meta():
    corpus = [CorpusEntry("cyclic:22"), CorpusEntry("product:cyclic:21,cyclic:2"),
              CorpusEntry("product:cyclic:3,cyclic:9", "all-pairs:2")]
    a = run_theorem_corpus(corpus)
    b = run_theorem_corpus(corpus, workers=2)
    assert canonical_json(a, drop_meta=True) == canonical_json(b, drop_meta=True)
    assert "meta" in a and "timestamp" in a["meta"]
    assert verify_report(a) == []


def test_verify_report_catches_a_bad_witness():
    report = run_theorem_corpus([CorpusEntry("cyclic:23")], windows=False)
    w = report["entries"][0]["statement2"]["witness"]
    w["kind"], w["vertices"], w["vertex_names"] = "pair", [0, 11], ["g^0", "g^11"]
    assert verify_report(report)
    report["entries"][0]["statement2"]["witness"] = None
    assert verify_report(report) == ["cyclic:23: true without witness"]


def test_load_corpus(tmp_path):
    p = tmp_path / "corpus.json"
    p.write_text(json.dumps([{"spec": "cyclic:21"}, {"spec": "cyclic:25", "genset": "all-pairs:1", "r": 20}]))
    entries = load_corpus(str(p))
    assert entries[1] == CorpusEntry("cyclic:25", "all-pairs:1", 20)
    p.write_text("[]")
    with pytest.raises(ValueError):
        load_corpus(str(p))


def test_default_corpus_covers_listed_groups():
    specs = {e.spec for e in default_corpus()}
    assert {f"cyclic:{n}" for n in range(21, 27)} <= specs
    assert {"heisenberg:3", "alternating:5", "product:quaternion:8,cyclic:4"} <= specs


def test_lemma_suite_words_only():
    report = run_lemma_suite("words", n_max=4)
    assert report["passed"] and report["result"]["name"] == "lemma-suite"
    with pytest.raises(ValueError):
        run_lemma_suite("everything")


def test_girth_search_small_and_honest_failure():
    found = girth_search(5, 7, trials=200, seed=0, verify_all_up_to=0)
    assert found["found"] and found["every_vertex_local_cutvertex"] and found["girth_exceeds"] == 5
    miss = girth_search(40, 5, trials=20, seed=0)
    assert not miss["found"] and miss["note"] == "not found at this scale"
    with pytest.raises(ValueError):
        girth_search(2, 7)


def test_analyze_examples():
    c12 = analyze("cyclic:12", "standard", 11)
    assert c12["local_cutvertices"]["count"] == 12
    cl = analyze("product:cyclic:12,cyclic:2", "standard", 11)
    rung = cl["local_2separators"]["representatives"][0]
    assert rung["h"] == "(g^0,g^1)" and rung["totally_nested"] and rung["component_sizes"] == [2, 2]
    a5 = analyze("alternating:5", "presentation", 9, crossing=False)
    assert a5["local_cutvertices"]["count"] == 60 and "count" in a5["local_2separators"]
