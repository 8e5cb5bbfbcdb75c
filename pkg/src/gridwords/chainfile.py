"""Plain-text chain files: one record per line, `[name:] word [@ x y]`.

`#` starts a comment; whitespace inside the word is ignored; labels must
be unique.  UTF-8, LF or CRLF.
"""

import re
from dataclasses import dataclass

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")


@dataclass(frozen=True)
class ChainRecord:
    word: str
    name: str = None
    start: tuple = None


@dataclass(frozen=True)
class ChainFile:
    records: tuple


class ChainFileError(ValueError):
    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


def parse_chain_file(data):
    """Parse chain-file text (bytes or str) into a ChainFile."""
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    records = []
    labels = set()
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        cut = line.find("#")
        if cut != -1:
            line = line[:cut]
        if not line.strip():
            continue
        body_start = 0
        name = None
        colon = line.find(":")
        if colon != -1:
            name = line[:colon].strip()
            if not _NAME.fullmatch(name):
                raise ChainFileError(f"bad label {name!r}", lineno)
            if name in labels:
                raise ChainFileError(f"duplicate label {name!r}", lineno)
            labels.add(name)
            body_start = colon + 1
        at = line.find("@", body_start)
        word_end = len(line) if at == -1 else at
        letters = []
        for i in range(body_start, word_end):
            ch = line[i]
            if ch.isspace():
                continue
            if ch not in "0123":
                raise ChainFileError(f"invalid character {ch!r}", lineno, i + 1)
            letters.append(ch)
        start = None
        if at != -1:
            fields = line[at + 1 :].split()
            try:
                sx, sy = (int(f) for f in fields)
                start = (sx, sy)
            except ValueError:
                raise ChainFileError("start point needs two integers", lineno) from None
        records.append(ChainRecord("".join(letters), name, start))
    return ChainFile(tuple(records))


def serialize_chain_file(chain_file):
    """Inverse of parse_chain_file for records that are not entirely empty."""
    lines = []
    for rec in chain_file.records:
        parts = []
        if rec.name is not None:
            parts.append(f"{rec.name}:")
        if rec.word:
            parts.append(rec.word)
        if rec.start is not None:
            parts.append(f"@ {rec.start[0]} {rec.start[1]}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n" if lines else ""
