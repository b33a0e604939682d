from __future__ import annotations

import codecs
import logging

import chardet

logger = logging.getLogger(__name__)

_BOMS = (
    (codecs.BOM_UTF8, "utf-8-sig"),
    (codecs.BOM_UTF16_LE, "utf-16"),
    (codecs.BOM_UTF16_BE, "utf-16"),
)


def decode_bytes(data: bytes) -> str:
    """Text of a matrix or polynomial file; BOMs are honoured, then UTF-8, then a guess."""
    if not data:
        return ""
    for bom, encoding in _BOMS:
        if data.startswith(bom):
            return data.decode(encoding)
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        pass
    encoding = chardet.detect(data).get("encoding") or "latin-1"
    logger.debug("input is not utf-8, decoding as %s", encoding)
    return data.decode(encoding, errors="replace")
