"""Layout primitives shared by every backend.

A Doc is just an immutable stack of lines; the operations are vertical
concatenation, one-level (4-space) indentation, and blank-line separation.
Bodies render as their blocks joined by exactly one blank line; empty
blocks vanish without leaving a separator behind.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

INDENT = "    "


@dataclass(frozen=True)
class Doc:
    lines: tuple[str, ...]

    @property
    def is_empty(self) -> bool:
        return not self.lines


EMPTY = Doc(())
BLANK = Doc(("",))


def text(s: str) -> Doc:
    """One or more literal lines (embedded newlines split)."""
    return Doc(tuple(s.split("\n")))


def vcat(docs: list[Doc]) -> Doc:
    lines: list[str] = []
    for d in docs:
        lines.extend(d.lines)
    return Doc(tuple(lines))


def indent(doc: Doc) -> Doc:
    return Doc(tuple(INDENT + line if line else line for line in doc.lines))


def join_blocks(docs: list[Doc]) -> Doc:
    """Non-empty docs separated by exactly one blank line."""
    present = [d for d in docs if not d.is_empty]
    lines: list[str] = []
    for i, d in enumerate(present):
        if i:
            lines.append("")
        lines.extend(d.lines)
    return Doc(tuple(lines))


def extract(doc: Doc) -> str:
    """Final text: no trailing blank lines, single trailing newline."""
    lines = list(doc.lines)
    while lines and not lines[-1].strip():
        lines.pop()
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parenthesis elision


def needs_parens(parent_prec: float, parent_assoc: str, side: str, child_prec: float) -> bool:
    """Wrap iff the child binds looser, or equally on the side the parent's
    associativity does not absorb ("none" absorbs neither side)."""
    if child_prec < parent_prec:
        return True
    if child_prec == parent_prec:
        if parent_assoc == "left":
            return side == "right"
        if parent_assoc == "right":
            return side == "left"
        return True
    return False


def wrap(child_text: str, wanted: bool) -> str:
    return f"({child_text})" if wanted else child_text


# ---------------------------------------------------------------------------
# Rendered output


class FileType(str, Enum):
    COMBINED = "combined"
    SOURCE = "source"
    HEADER = "header"
    AUX = "aux"


@dataclass(frozen=True)
class RenderedFile:
    path: str
    file_type: FileType
    text: str


@dataclass(frozen=True)
class FileSet:
    files: tuple[RenderedFile, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for f in self.files:
            if f.path in seen:
                raise ValueError(f"duplicate path in file set: {f.path}")
            seen.add(f.path)

    def __iter__(self):
        return iter(self.files)

    def __len__(self) -> int:
        return len(self.files)

    def paths(self) -> list[str]:
        return [f.path for f in self.files]
