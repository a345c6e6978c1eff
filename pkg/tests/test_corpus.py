from matroid_workbench import CORPUS, corpus_matroid, verify_corpus
from matroid_workbench.corpus import entry_by_name, verify_entry


def test_corpus_has_at_least_twelve_entries():
    assert len(CORPUS) >= 12
    names = [e["name"] for e in CORPUS]
    assert len(set(names)) == len(names)
    for entry in CORPUS:
        assert entry["expected"], entry["name"]
        for check in entry["expected"]:
            assert check["tag"] in ("PAPER", "TRIVIAL", "DERIVED"), entry["name"]
            assert "check" in check and "value" in check


def test_every_descriptor_builds(corpus_by_name):
    for entry in CORPUS:
        M = corpus_by_name[entry["name"]]
        assert M.size >= 1


def test_verify_single_entry():
    entry = entry_by_name("u_2_3")
    checks = verify_entry(entry)
    assert checks
    for c in checks:
        assert c["pass"] is True, c
        assert c["got"] == c["expected"], c


def test_verify_corpus_all_pass():
    report = verify_corpus()
    assert report["all_pass"] is True
    assert len(report["entries"]) == len(CORPUS)
    for entry in report["entries"]:
        assert entry["pass"] is True, entry["name"]
        assert entry["checks"], entry["name"]


def test_corpus_matroid_unknown_name():
    import pytest

    from matroid_workbench import InvalidInput

    with pytest.raises(InvalidInput):
        corpus_matroid("not_a_matroid")
