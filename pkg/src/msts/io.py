"""JSON-lines design files and PTD files."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

from .core import Design, InvalidWord, MixedAlphabet, SparseWord

FORMAT = "msts-design"
VERSION = 1


class DesignFormatError(ValueError):
    """A design or PTD file could not be read."""


class MalformedJSON(DesignFormatError):
    pass


class InvalidContent(DesignFormatError):
    """Well-formed JSON that violates the file's invariants."""


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def design_to_text(design: Design) -> str:
    header = {
        "format": FORMAT,
        "version": VERSION,
        "alphabet": list(design.alphabet.sizes),
        "meta": design.meta,
    }
    lines = [_dumps(header)]
    lines.extend(_dumps({"cw": c.to_list()}) for c in design.sorted_codewords())
    return "\n".join(lines) + "\n"


def write_design(design: Design, dest: str | Path | TextIO) -> None:
    text = design_to_text(design)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8", newline="\n")


def _parse_line(line: str, lineno: int):
    try:
        return json.loads(line)
    except json.JSONDecodeError as e:
        raise MalformedJSON(f"line {lineno}: {e}") from None


def design_from_text(text: str) -> Design:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InvalidContent("empty design file")
    header = _parse_line(lines[0], 1)
    if not isinstance(header, dict) or header.get("format") != FORMAT:
        raise InvalidContent(f"line 1: not an {FORMAT} header")
    if header.get("version") != VERSION:
        raise InvalidContent(f"unsupported version {header.get('version')!r}")
    try:
        alphabet = MixedAlphabet(tuple(header["alphabet"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidContent(f"line 1: bad alphabet ({e})") from None
    meta = header.get("meta", {})

    seen: set[SparseWord] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        obj = _parse_line(line, lineno)
        try:
            entries = tuple((int(p), int(v)) for p, v in obj["cw"])
            word = SparseWord(entries)
        except (KeyError, TypeError, ValueError, InvalidWord) as e:
            raise InvalidContent(f"line {lineno}: bad codeword ({e})") from None
        if word.weight != 3 or not word.is_valid_for(alphabet):
            raise InvalidContent(f"line {lineno}: {word!r} is not a weight-3 word over the alphabet")
        if word in seen:
            raise InvalidContent(f"line {lineno}: duplicate codeword {word!r}")
        seen.add(word)
    return Design(alphabet, frozenset(seen), meta)


def read_design(src: str | Path | TextIO) -> Design:
    if hasattr(src, "read"):
        return design_from_text(src.read())
    return design_from_text(Path(src).read_text(encoding="utf-8"))


def ptd_to_json(ptd) -> dict:
    return {
        "m": ptd.m,
        "r": ptd.r,
        "factors": [[list(p) for p in f] for f in ptd.factors],
        "triples": [list(t) for t in ptd.triples],
    }


def write_ptd(ptd, dest: str | Path | TextIO) -> None:
    text = _dumps(ptd_to_json(ptd)) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8", newline="\n")


def ptd_from_text(text: str):
    from .pairs_triples import PairsTriplesDesign

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedJSON(str(e)) from None
    try:
        return PairsTriplesDesign(
            m=int(obj["m"]),
            r=int(obj["r"]),
            factors=tuple(tuple((int(a), int(b)) for a, b in f) for f in obj["factors"]),
            triples=tuple(tuple(int(x) for x in t) for t in obj["triples"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidContent(f"bad PTD object ({e})") from None


def read_ptd(src: str | Path | TextIO):
    if hasattr(src, "read"):
        return ptd_from_text(src.read())
    return ptd_from_text(Path(src).read_text(encoding="utf-8"))
