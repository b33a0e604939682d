from __future__ import annotations

from pathlib import Path

from src.utils.encoding import decode_bytes


def read_text_any(path: Path) -> str:
    """Read an input file whose encoding is not known in advance."""
    return decode_bytes(path.read_bytes())


def write_text_utf8(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
