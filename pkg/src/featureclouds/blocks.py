"""Feature block data model and ingestion.

A feature implementation block is a flat list of source-code identifier
names, each optionally tagged with the kind of program element it names.
Blocks arrive as line-oriented ``.block`` files:

    # comment lines and blank lines are skipped
    class<TAB>MyOval
    method<TAB>getOvalx
    OvalSettings            <- bare names default to kind "unknown"

Ground-truth names for scoring arrive as a two-column CSV with the header
``block_id,manual_name``.
"""
from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping

from .errors import BlockParseError, CorpusError, EmptyBlockError, TruthError


class IdentifierKind(enum.Enum):
    """Kind of program element an identifier names."""

    PACKAGE = "package"
    CLASS = "class"
    METHOD = "method"
    ATTRIBUTE = "attribute"
    UNKNOWN = "unknown"


_KIND_TAGS = {kind.value: kind for kind in IdentifierKind}


@dataclass(frozen=True)
class Identifier:
    """One identifier occurrence inside a block.

    Blocks may legitimately contain the same name twice (say, a method and
    an attribute that share a name); every occurrence counts.
    """

    raw: str
    kind: IdentifierKind = IdentifierKind.UNKNOWN

    def __post_init__(self) -> None:
        if not self.raw:
            raise ValueError("identifier name must be non-empty")
        if "\n" in self.raw or "\r" in self.raw:
            raise ValueError("identifier name must not contain line breaks")


@dataclass(frozen=True)
class FeatureBlock:
    """An identified feature implementation block."""

    id: str
    identifiers: tuple[Identifier, ...]

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("block id must be non-empty")
        object.__setattr__(self, "identifiers", tuple(self.identifiers))

    def __len__(self) -> int:
        return len(self.identifiers)


@dataclass(frozen=True)
class Corpus:
    """A set of blocks with unique ids, ordered by id."""

    blocks: tuple[FeatureBlock, ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.blocks, key=lambda b: b.id))
        seen: set[str] = set()
        for block in blocks:
            if block.id in seen:
                raise CorpusError(f"duplicate block id {block.id!r} in corpus")
            seen.add(block.id)
        object.__setattr__(self, "blocks", blocks)

    def __iter__(self) -> Iterator[FeatureBlock]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def ids(self) -> tuple[str, ...]:
        return tuple(block.id for block in self.blocks)


@dataclass(frozen=True)
class TruthMap:
    """Manual feature names keyed by block id."""

    entries: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", dict(self.entries))

    def get(self, block_id: str) -> str | None:
        return self.entries.get(block_id)


def parse_block_file(text: str, block_id: str) -> FeatureBlock:
    """Parse ``.block`` file content into a FeatureBlock.

    Each non-blank, non-comment line is either ``kind<TAB>name`` or a bare
    name. Unknown kind tags and empty names are rejected with the offending
    line number; a file with zero identifiers raises EmptyBlockError.
    """
    identifiers: list[Identifier] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.strip(" \r\n").split("\t")
        if len(parts) == 1:
            kind, name = IdentifierKind.UNKNOWN, parts[0].strip()
        elif len(parts) == 2:
            tag, name = parts[0].strip(), parts[1].strip()
            kind = _KIND_TAGS.get(tag)
            if kind is None:
                raise BlockParseError(
                    f"line {lineno}: unknown identifier kind {tag!r} "
                    f"(expected one of {', '.join(sorted(_KIND_TAGS))})"
                )
        else:
            raise BlockParseError(
                f"line {lineno}: expected 'kind<TAB>name' or a bare name, "
                f"got {len(parts)} tab-separated fields"
            )
        if not name:
            raise BlockParseError(f"line {lineno}: empty identifier name")
        identifiers.append(Identifier(name, kind))
    if not identifiers:
        raise EmptyBlockError(f"block {block_id!r} contains no identifiers")
    return FeatureBlock(block_id, tuple(identifiers))


def format_block(block: FeatureBlock) -> str:
    """Serialize a block back to the ``.block`` line format.

    Inverse of parse_block_file for blocks without comments: identifiers of
    kind "unknown" become bare names, all others ``kind<TAB>name``.
    """
    lines = []
    for ident in block.identifiers:
        if ident.kind is IdentifierKind.UNKNOWN:
            lines.append(ident.raw)
        else:
            lines.append(f"{ident.kind.value}\t{ident.raw}")
    return "\n".join(lines) + "\n"


def load_block_file(path: str | Path) -> FeatureBlock:
    """Read and parse one block file; the block id is the file stem."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"{p}: {exc}") from exc
    try:
        return parse_block_file(text, p.stem)
    except BlockParseError as exc:
        raise type(exc)(f"{p}: {exc}") from exc


def load_corpus(directory: str | Path) -> Corpus:
    """Load every ``*.block`` file under a directory as one corpus.

    Blocks are ordered by id, so the result depends only on the set of file
    names, never on directory-listing order.
    """
    d = Path(directory)
    if not d.is_dir():
        raise CorpusError(f"{d}: not a directory")
    try:
        paths = sorted(d.glob("*.block"), key=lambda p: p.stem)
    except OSError as exc:
        raise CorpusError(f"{d}: {exc}") from exc
    return Corpus(tuple(load_block_file(p) for p in paths))


def load_truth(text: str) -> TruthMap:
    """Parse ground-truth CSV content.

    The header must be exactly ``block_id,manual_name``. Duplicate block
    ids and empty fields are rejected with their line number.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise TruthError("empty truth file, expected header 'block_id,manual_name'") from None
    if [cell.strip() for cell in header] != ["block_id", "manual_name"]:
        raise TruthError(
            f"bad truth header {','.join(header)!r}, expected 'block_id,manual_name'"
        )
    entries: dict[str, str] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise TruthError(f"line {lineno}: expected 2 columns, got {len(row)}")
        block_id, name = row[0].strip(), row[1].strip()
        if not block_id:
            raise TruthError(f"line {lineno}: empty block id")
        if not name:
            raise TruthError(f"line {lineno}: empty manual name for block {block_id!r}")
        if block_id in entries:
            raise TruthError(f"line {lineno}: duplicate block id {block_id!r}")
        entries[block_id] = name
    return TruthMap(entries)


def load_truth_file(path: str | Path) -> TruthMap:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise TruthError(f"{p}: {exc}") from exc
    try:
        return load_truth(text)
    except TruthError as exc:
        raise TruthError(f"{p}: {exc}") from exc
