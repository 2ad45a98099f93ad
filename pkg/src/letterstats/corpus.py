"""Corpus ingestion: manifests, document loading, e-book boilerplate removal.

Manifest format (UTF-8, line oriented, tab separated):

    # comment lines and blank lines are ignored
    @categories<TAB>news<TAB>novels<TAB>plays<TAB>science
    <doc_id><TAB><category><TAB><source><TAB><strip>

``source`` is a local path (resolved relative to the manifest's directory)
or an http(s) URL.  ``strip`` is ``yes`` to remove e-book boilerplate or
``no`` to load the file verbatim.  The optional @categories directive
declares the allowed category list; without it, any category is accepted.

Remote fetches are cached on disk (atomic write-then-rename, keyed by URL
hash) so repeat analyses work offline.  Cache directory resolution order:
the LETTERSTATS_CACHE_DIR environment variable, then ~/.cache/letterstats.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
import urllib.request
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DuplicateDocIdError,
    EmptyAfterStripError,
    FetchError,
    ManifestError,
    MarkerOrderError,
)

START_MARKER = "*** START OF"
END_MARKER = "*** END OF"

FETCH_TIMEOUT = 30.0
FETCH_SIZE_CAP = 8 * 1024 * 1024
FETCH_RETRIES = 1

CACHE_ENV_VAR = "LETTERSTATS_CACHE_DIR"


@dataclass(frozen=True)
class ManifestEntry:
    doc_id: str
    category: str
    source: str
    strip_boilerplate: bool


@dataclass(frozen=True)
class CorpusManifest:
    entries: tuple[ManifestEntry, ...]
    categories: tuple[str, ...]
    base_dir: Path

    def category_counts(self) -> dict[str, int]:
        return dict(Counter(e.category for e in self.entries))

    def for_category(self, category: str) -> list[ManifestEntry]:
        return [e for e in self.entries if e.category == category]


@dataclass(frozen=True)
class Document:
    doc_id: str
    category: str
    text: str
    source_note: str


def load_manifest(path) -> CorpusManifest:
    """Parse and validate a manifest file."""
    path = Path(path)
    entries: list[ManifestEntry] = []
    declared: tuple[str, ...] | None = None
    seen_ids: set[str] = set()

    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if fields[0] == "@categories":
                if declared is not None:
                    raise ManifestError("repeated @categories directive", line_no)
                declared = tuple(f.strip() for f in fields[1:] if f.strip())
                if not declared:
                    raise ManifestError("@categories declares no categories", line_no)
                continue
            if len(fields) != 4:
                raise ManifestError(
                    f"expected 4 tab-separated fields, got {len(fields)}", line_no
                )
            doc_id, category, source, strip_flag = (f.strip() for f in fields)
            if not doc_id or not category or not source:
                raise ManifestError("doc_id, category and source must be nonempty", line_no)
            if strip_flag not in ("yes", "no"):
                raise ManifestError(
                    f"strip flag must be 'yes' or 'no', got {strip_flag!r}", line_no
                )
            if doc_id in seen_ids:
                raise DuplicateDocIdError(f"duplicate doc_id {doc_id!r}", line_no)
            if declared is not None and category not in declared:
                raise ManifestError(
                    f"category {category!r} not in declared list {declared}", line_no
                )
            seen_ids.add(doc_id)
            entries.append(ManifestEntry(doc_id, category, source, strip_flag == "yes"))

    if declared is None:
        declared = tuple(sorted({e.category for e in entries}))
    return CorpusManifest(tuple(entries), declared, path.parent.resolve())


def strip_boilerplate(text: str) -> str:
    """Return the span strictly between the first line containing
    '*** START OF' and the first subsequent line containing '*** END OF'.

    The marker lines themselves are excluded and leading/trailing blank
    lines of the body are trimmed.  When neither marker is present the text
    is returned unchanged; a lone or out-of-order marker raises
    MarkerOrderError.  Idempotent: stripping stripped text is a no-op.
    """
    lines = text.splitlines(keepends=True)
    start_idx = next((i for i, ln in enumerate(lines) if START_MARKER in ln), None)
    end_idx = next((i for i, ln in enumerate(lines) if END_MARKER in ln), None)

    if start_idx is None and end_idx is None:
        return text
    if start_idx is None:
        raise MarkerOrderError("end marker present without a start marker")
    if end_idx is not None and end_idx < start_idx:
        raise MarkerOrderError("end marker appears before the start marker")
    end_idx = next(
        (i for i in range(start_idx + 1, len(lines)) if END_MARKER in lines[i]), None
    )
    if end_idx is None:
        raise MarkerOrderError("start marker present without a subsequent end marker")

    body = "".join(lines[start_idx + 1 : end_idx])
    return body.strip("\n")


def cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "letterstats"


def _cache_path(url: str) -> Path:
    return cache_dir() / (hashlib.sha256(url.encode("utf-8")).hexdigest() + ".txt")


def _http_get(url: str, timeout: float, size_cap: int) -> bytes:
    req = urllib.request.Request(url, headers={"User-Agent": "letterstats/0.1"})
    with urllib.request.urlopen(req, timeout=timeout) as resp:
        data = resp.read(size_cap + 1)
    if len(data) > size_cap:
        raise FetchError(f"{url}: response exceeds size cap of {size_cap} bytes")
    return data


def fetch_url(
    url: str,
    timeout: float = FETCH_TIMEOUT,
    size_cap: int = FETCH_SIZE_CAP,
    use_cache: bool = True,
) -> tuple[bytes, bool]:
    """Fetch a URL with one retry and disk caching.

    Returns (data, from_cache).  Cached files are written via a temp file
    and os.replace so concurrent fetchers never see partial content.
    """
    cached = _cache_path(url)
    if use_cache and cached.is_file():
        return cached.read_bytes(), True

    last_error: Exception | None = None
    for _ in range(FETCH_RETRIES + 1):
        try:
            data = _http_get(url, timeout, size_cap)
            break
        except FetchError:
            raise
        except Exception as exc:  # URLError, socket timeout, HTTP errors
            last_error = exc
    else:
        raise FetchError(f"could not fetch {url}: {last_error}")

    if use_cache:
        cached.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=cached.parent, suffix=".part")
        try:
            with os.fdopen(fd, "wb") as tmp:
                tmp.write(data)
            os.replace(tmp_name, cached)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    return data, False


def _is_url(source: str) -> bool:
    return source.startswith("http://") or source.startswith("https://")


def load_document(entry: ManifestEntry, base_dir: Path | None = None) -> Document:
    """Load one manifest entry into a Document.

    Local sources resolve relative to ``base_dir`` (normally the manifest
    directory).  Bytes are decoded as UTF-8 with invalid sequences replaced,
    which cannot alter any a-z counts.
    """
    notes = []
    if _is_url(entry.source):
        data, from_cache = fetch_url(entry.source)
        notes.append(f"fetched {entry.source}" + (" (cache)" if from_cache else ""))
    else:
        src = Path(entry.source)
        if base_dir is not None and not src.is_absolute():
            src = base_dir / src
        data = src.read_bytes()
        notes.append(f"read {src}")
    notes.append(f"{len(data)} bytes")

    text = data.decode("utf-8", errors="replace")
    if entry.strip_boilerplate:
        stripped = strip_boilerplate(text)
        if stripped == text:
            notes.append("no boilerplate markers found")
        else:
            notes.append("boilerplate stripped")
        text = stripped
    if not text.strip():
        raise EmptyAfterStripError(f"{entry.doc_id}: no text after loading")
    return Document(entry.doc_id, entry.category, text, "; ".join(notes))


def load_corpus(manifest: CorpusManifest) -> list[Document]:
    """Load every manifest entry; any per-entry failure aborts with context."""
    docs = []
    for entry in manifest.entries:
        try:
            docs.append(load_document(entry, manifest.base_dir))
        except OSError as exc:
            # OSError renders from strerror, not args
            exc.strerror = f"{entry.doc_id}: {exc.strerror or exc}"
            raise
        except Exception as exc:
            # keep the original exception type, prepend which entry failed
            exc.args = (f"{entry.doc_id}: {exc}",)
            raise
    return docs
