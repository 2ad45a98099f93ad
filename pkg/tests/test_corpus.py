"""Manifest parsing, document loading, caching, boilerplate stripping."""

import os

import pytest

from letterstats import corpus
from letterstats.errors import (
    DuplicateDocIdError,
    EmptyAfterStripError,
    FetchError,
    ManifestError,
    MarkerOrderError,
)


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_load_manifest_two_entries(tmp_path):
    m = write(
        tmp_path / "m.tsv",
        "# comment\n"
        "doc1\tnovels\tdoc1.txt\tno\n"
        "\n"
        "doc2\tplays\tdoc2.txt\tyes\n",
    )
    manifest = corpus.load_manifest(m)
    assert len(manifest.entries) == 2
    assert manifest.categories == ("novels", "plays")
    assert manifest.entries[1].strip_boilerplate is True
    assert manifest.category_counts() == {"novels": 1, "plays": 1}


def test_duplicate_doc_id_rejected(tmp_path):
    m = write(tmp_path / "m.tsv", "d\tx\ta.txt\tno\nd\tx\tb.txt\tno\n")
    with pytest.raises(DuplicateDocIdError):
        corpus.load_manifest(m)


def test_manifest_field_count_and_flag_validation(tmp_path):
    with pytest.raises(ManifestError) as exc:
        corpus.load_manifest(write(tmp_path / "a.tsv", "d\tx\ta.txt\n"))
    assert "line 1" in str(exc.value)
    with pytest.raises(ManifestError):
        corpus.load_manifest(write(tmp_path / "b.tsv", "d\tx\ta.txt\tmaybe\n"))


def test_declared_categories_enforced(tmp_path):
    good = write(
        tmp_path / "good.tsv",
        "@categories\tnews\tnovels\n" "d1\tnews\ta.txt\tno\n",
    )
    assert corpus.load_manifest(good).categories == ("news", "novels")
    bad = write(
        tmp_path / "bad.tsv",
        "@categories\tnews\n" "d1\tplays\ta.txt\tno\n",
    )
    with pytest.raises(ManifestError):
        corpus.load_manifest(bad)


def test_load_local_document(tmp_path):
    write(tmp_path / "m.tsv", "d1\tnews\thello.txt\tno\n")
    write(tmp_path / "hello.txt", "hello world")
    manifest = corpus.load_manifest(tmp_path / "m.tsv")
    doc = corpus.load_document(manifest.entries[0], manifest.base_dir)
    assert doc.text == "hello world"
    assert doc.category == "news"
    assert "11 bytes" in doc.source_note


def test_missing_file_is_oserror(tmp_path):
    entry = corpus.ManifestEntry("d", "x", "nope.txt", False)
    with pytest.raises(OSError):
        corpus.load_document(entry, tmp_path)


def test_strip_boilerplate_absent_markers_unchanged():
    text = "just an ordinary file\nwith two lines"
    assert corpus.strip_boilerplate(text) == text


def test_strip_boilerplate_extracts_body():
    text = (
        "header junk\n"
        "*** START OF THE EBOOK X ***\n"
        "\n"
        "BODY LINE 1\n"
        "BODY LINE 2\n"
        "\n"
        "*** END OF THE EBOOK X ***\n"
        "license junk\n"
    )
    assert corpus.strip_boilerplate(text) == "BODY LINE 1\nBODY LINE 2"


def test_strip_boilerplate_is_idempotent():
    text = "a\n*** START OF Y ***\nbody text\n*** END OF Y ***\nb\n"
    once = corpus.strip_boilerplate(text)
    assert corpus.strip_boilerplate(once) == once


def test_strip_boilerplate_marker_errors():
    with pytest.raises(MarkerOrderError):
        corpus.strip_boilerplate("*** END OF X ***\nbody\n*** START OF X ***\n")
    with pytest.raises(MarkerOrderError):
        corpus.strip_boilerplate("*** START OF X ***\nbody with no end\n")
    with pytest.raises(MarkerOrderError):
        corpus.strip_boilerplate("body\n*** END OF X ***\n")


def test_empty_after_strip(tmp_path):
    write(tmp_path / "empty.txt", "*** START OF Z ***\n\n\n*** END OF Z ***\n")
    entry = corpus.ManifestEntry("d", "x", "empty.txt", True)
    with pytest.raises(EmptyAfterStripError):
        corpus.load_document(entry, tmp_path)


def test_load_corpus_reports_failing_entry(tmp_path):
    write(tmp_path / "m.tsv", "ok\tx\tok.txt\tno\nbroken\tx\tmissing.txt\tno\n")
    write(tmp_path / "ok.txt", "fine")
    manifest = corpus.load_manifest(tmp_path / "m.tsv")
    with pytest.raises(OSError) as exc:
        corpus.load_corpus(manifest)
    assert "broken" in str(exc.value)


def test_fetch_uses_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(corpus.CACHE_ENV_VAR, str(tmp_path / "cache"))
    calls = []

    def fake_get(url, timeout, size_cap):
        calls.append(url)
        return b"payload text"

    monkeypatch.setattr(corpus, "_http_get", fake_get)
    data1, cached1 = corpus.fetch_url("https://example.test/doc.txt")
    data2, cached2 = corpus.fetch_url("https://example.test/doc.txt")
    assert data1 == data2 == b"payload text"
    assert (cached1, cached2) == (False, True)
    assert len(calls) == 1
    files = list((tmp_path / "cache").iterdir())
    assert len(files) == 1 and files[0].suffix == ".txt"
    assert not [p for p in files if p.suffix == ".part"]


def test_fetch_retries_once_then_fails(tmp_path, monkeypatch):
    monkeypatch.setenv(corpus.CACHE_ENV_VAR, str(tmp_path / "cache"))
    attempts = []

    def flaky(url, timeout, size_cap):
        attempts.append(url)
        raise ConnectionError("nope")

    monkeypatch.setattr(corpus, "_http_get", flaky)
    with pytest.raises(FetchError):
        corpus.fetch_url("https://example.test/x.txt")
    assert len(attempts) == 2  # first try + single retry


def test_fetch_size_cap(monkeypatch, tmp_path):
    monkeypatch.setenv(corpus.CACHE_ENV_VAR, str(tmp_path / "cache"))

    class FakeResponse:
        def read(self, n):
            return b"x" * n

        def __enter__(self):
            return self

        def __exit__(self, *a):
            return False

    monkeypatch.setattr(
        corpus.urllib.request, "urlopen", lambda req, timeout: FakeResponse()
    )
    with pytest.raises(FetchError):
        corpus.fetch_url("https://example.test/huge.txt", size_cap=1024)


def test_remote_entry_goes_through_fetch(tmp_path, monkeypatch):
    monkeypatch.setenv(corpus.CACHE_ENV_VAR, str(tmp_path / "cache"))
    monkeypatch.setattr(corpus, "_http_get", lambda u, t, s: "remote body".encode())
    entry = corpus.ManifestEntry("r1", "news", "https://example.test/a.txt", False)
    doc = corpus.load_document(entry)
    assert doc.text == "remote body"
    assert "fetched" in doc.source_note


def test_invalid_bytes_replaced(tmp_path):
    (tmp_path / "weird.txt").write_bytes(b"caf\xe9 latte \xff ok")
    entry = corpus.ManifestEntry("w", "x", "weird.txt", False)
    doc = corpus.load_document(entry, tmp_path)
    # replacement cannot alter a-z counts
    assert "caf" in doc.text and "latte" in doc.text and "ok" in doc.text
