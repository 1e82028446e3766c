"""OEIS-style b-file interchange: one "index value" pair per line.

Indices are 1-based, strictly increasing, no gaps. Comment lines starting
with '#' are accepted on input and never emitted. Written output is
diff-stable: exact decimal integers, single space, newline-terminated.
"""
from __future__ import annotations

from typing import IO, Iterable, Sequence


class BFileError(ValueError):
    """Malformed b-file input; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def write_bfile(terms: Iterable[int], stream: IO[str]) -> None:
    """Write terms as lines "1 a(1)", "2 a(2)", ..."""
    stream.writelines(f"{i} {v}\n" for i, v in enumerate(terms, start=1))


def read_bfile(stream: IO[str]) -> list[int]:
    """Parse a b-file back into the 1-indexed term list."""
    terms: list[int] = []
    expected = 1
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(line_no, f"expected 'index value', got {line!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(line_no, f"non-integer field in {line!r}") from None
        if index != expected:
            raise BFileError(line_no, f"expected index {expected}, got {index}")
        terms.append(value)
        expected += 1
    return terms


def format_bfile(terms: Sequence[int]) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(terms, start=1))
