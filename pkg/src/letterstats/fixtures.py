"""Locators for the bundled fixture corpus and reference data.

The bundled corpus is a desk-scale stand-in for the kind of collection the
standards were designed around: four categories (news, novels, plays,
science) with twenty documents each, plus five held-out test documents per
category.  See data/SOURCES.md for provenance and caveats.
"""

from __future__ import annotations

from importlib.resources import as_file, files
from pathlib import Path


def data_dir() -> Path:
    with as_file(files("letterstats") / "data") as p:
        return Path(p)


def standards_manifest() -> Path:
    """Manifest of the 80-document fixture corpus (20 docs x 4 categories)."""
    return data_dir() / "manifest_standards.tsv"


def test_manifest() -> Path:
    """Manifest of the 20 held-out fixture test documents (5 x 4 categories)."""
    return data_dir() / "manifest_test.tsv"


def passage(n: int) -> Path:
    """One of the three bundled pencil-genealogy passages (1, 2 or 3)."""
    if n not in (1, 2, 3):
        raise ValueError("passage number must be 1, 2 or 3")
    return data_dir() / "passages" / f"pencil_{n}.txt"


def reference_standard_file(category: str) -> Path:
    """Saved .std file for one of the published reference distributions."""
    return data_dir() / "reference" / f"{category}.std"
