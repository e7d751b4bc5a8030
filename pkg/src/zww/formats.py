"""Text and JSON serialization for words, censuses and Lyndon arrays."""

from __future__ import annotations

import json

from .analysis import CensusReport, LyndonArray
from .exceptions import DomainError
from .words import MAX_LETTER, Word


class FormatError(DomainError):
    """Malformed word text or JSON."""


def word_to_text(w: Word) -> str:
    return " ".join(map(str, w.tolist())) + "\n"


def parse_word_line(line: str) -> Word:
    """Parse one line of space-separated base-10 letters."""
    line = line.rstrip("\n")
    if not line:
        raise FormatError("empty word line")
    letters = []
    for token in line.split(" "):
        if not token.isdigit():
            raise FormatError(f"bad letter token {token!r}")
        value = int(token)
        if value > MAX_LETTER:
            raise FormatError(f"letter {value} does not fit in 32 bits")
        letters.append(value)
    return Word(letters)


def parse_words(text: str) -> list[Word]:
    return [parse_word_line(line) for line in text.splitlines() if line.strip()]


def word_to_json(w: Word, k: int | None = None) -> dict:
    doc = {"length": len(w), "letters": w.tolist()}
    if k is not None:
        doc = {"k": k, **doc}
    return doc


def word_from_json(doc: dict) -> Word:
    try:
        letters = doc["letters"]
        length = doc["length"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"word JSON is missing a field: {exc}") from None
    if not all(isinstance(x, int) and x >= 0 for x in letters):
        raise FormatError("letters must be non-negative integers")
    if length != len(letters):
        raise FormatError("length does not match the letter list")
    return Word(letters)


def census_to_json(report: CensusReport, **extra) -> str:
    return json.dumps({**report.to_dict(), **extra})


def lyndon_array_to_text(w: Word | None, arr: LyndonArray, header: str | None = None) -> str:
    lines = []
    if header is not None:
        lines.append(f"# {header}\n")
    if w is not None:
        lines.append(word_to_text(w))
    lines.append(" ".join(map(str, arr.ell.tolist())) + "\n")
    return "".join(lines)


def parse_lyndon_array_text(text: str) -> tuple[Word, LyndonArray]:
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    if len(lines) != 2:
        raise FormatError("expected a word line and an array line")
    w = parse_word_line(lines[0])
    ell = [int(t) for t in lines[1].split(" ")]
    if len(ell) != len(w):
        raise FormatError("array length differs from word length")
    return w, LyndonArray(ell)


def lyndon_array_to_json(w: Word | None, arr: LyndonArray, k: int | None = None) -> str:
    doc = {"ell": arr.ell.tolist(), "lambda": arr.lam.tolist()}
    if w is not None:
        doc = {**word_to_json(w, k), **doc}
    elif k is not None:
        doc = {"k": k, **doc}
    return json.dumps(doc)
