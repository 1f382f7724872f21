import os
import pathlib

import pytest

import corpusforge as cf

TOY = pathlib.Path(os.environ.get("CORPUSFORGE_TOY_DIR", pathlib.Path(__file__).parents[1] / "fixtures" / "toy"))


@pytest.fixture(scope="module")
def lexicon():
    return cf.Lexicon.load(TOY / "lexicon.tsv")


def test_lexicon(lexicon):
    assert len(lexicon) == 8
    assert lexicon.phonemize("HUND") == ["h", "ʊ", "n", "t"]
    assert "katze" in lexicon
    with pytest.raises(cf.DataError):
        lexicon.phonemize("xyzzy")
    assert cf.biphones(["a", "b", "a"]) == [("a", "b"), ("b", "a")]


def test_selection(lexicon):
    pool = cf.Lexicon.parse("w1\ta b c d\nw2\ta b c\nw3\td e\n")
    gbc = cf.gbc_select(pool, ["w1", "w2", "w3"], 2)
    assert gbc["words"] == ["w1", "w3"]
    assert gbc["report"]["per_step_gain"] == [3, 1]
    assert cf.brute_force_max_coverage(pool, ["w1", "w2", "w3"], 1) == (["w1"], 3)

    words = lexicon.words()
    first = cf.gbc_select(lexicon, words, 3)["words"]
    rest = [w for w in words if w not in first]
    second = cf.pwps_select(lexicon, rest, 2, {"ʃ": 2.0, "ɛ": 1.0}, prior=first)
    assert len(second["words"]) == 2
    assert cf.coverage_report(lexicon, first)["word_count"] == 3


def test_rechain_and_audio(tmp_path):
    manifest = cf.Manifest.load(TOY / "manifest.csv")
    inv = cf.WordInventory.from_manifest(manifest, speaker="F02")
    plan = cf.plan_sentence("Der Hund bellt.", inv)
    assert [w["word"] for w in plan["words"]] == ["der", "hund", "bellt"]
    assert cf.plan_random(inv, 5, 1) == cf.plan_random(inv, 5, 1)

    clips = [cf.read_wav(TOY / "audio" / w["recording"]) for w in plan["words"]]
    out = cf.concat(clips, gap_ms=150)
    assert len(out) == sum(len(c) for c in clips) + 2 * 2400
    cf.write_wav(out, tmp_path / "u.wav")
    assert cf.read_wav(tmp_path / "u.wav").samples == out.samples

    with pytest.raises(cf.DataError):
        cf.concat([cf.AudioClip([1], 16000), cf.AudioClip([1], 44100)])


def test_split():
    manifest = cf.Manifest.load(TOY / "manifest.csv")
    a = cf.split(manifest, "strict", 0.5, 11)
    assert len(a.labels) == len(manifest)
    audit = cf.audit_leakage(manifest, a)
    assert audit["spanning_group_keys"] == 0
    assert audit["vocabulary_overlap"] == 0
    with pytest.raises(cf.UsageError):
        cf.split(manifest, "random", 0.5, 1)


def test_metrics():
    assert cf.normalize_for_scoring("Der Hund!") == ["der", "hund"]
    r = cf.edit_rate("der hund bellt", "der hund")
    assert (r["deletions"], r["reference_length"]) == (1, 3)
    assert cf.edit_rate("abc", "abd", unit="cer")["rate"] == pytest.approx(1 / 3)
    pooled = cf.corpus_rate([("a", "x y", "x z"), ("b", "a b c d e f g h", "a b c d e f g h")])
    assert pooled["rate"] == 0.1
    with pytest.raises(cf.DataError):
        cf.edit_rate("", "x")
