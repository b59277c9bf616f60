"""Bundled reference data."""

from __future__ import annotations

from importlib.resources import files

from .evaluate import Annotation, parse_annotations

GOLD_FILE = "homer_gold.tsv"


def gold_path():
    return files("hexscan").joinpath("data", GOLD_FILE)


def load_gold() -> list[Annotation]:
    """Twenty hand-scanned verses (Iliad 1.1-10, Odyssey 1.1-10)."""
    text = gold_path().read_text(encoding="utf-8")
    return parse_annotations(text.splitlines(), source=GOLD_FILE)
