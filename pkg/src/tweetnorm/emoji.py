"""Replace emoji scalars and ASCII emoticons with uppercase name tokens.

Substitution happens after UTF-8 decoding, always in the text domain. The
emoji table ships with the package (one scalar per line, UCD names); the
emoticon lexicon is our own fixed stand-in since no published table exists
for it. Unknown scalars deliberately pass through untouched, mirroring the
"some emojis were not replaced" behavior of the original pipeline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Mapping

ZWJ = "‍"  # joiner glue inside multi-scalar emoji, dropped on replace/strip

_NAME_RE = re.compile(r"^[A-Z0-9][A-Z0-9 \-]*$")
_WS_RUN = re.compile(r"[ \t\r\n\f\v]+")

MIN_EMOJI_ENTRIES = 842  # recognizable-code count of the reference pipeline


class TableFormatError(ValueError):
    """A substitution table file violates its format or invariants."""


@dataclass(frozen=True)
class EmojiTable:
    """Unicode scalar value -> uppercase replacement name."""

    entries: Mapping[int, str]
    version: str

    def validate(self) -> None:
        if len(self.entries) < MIN_EMOJI_ENTRIES:
            raise TableFormatError(
                f"emoji table has {len(self.entries)} entries, needs >= {MIN_EMOJI_ENTRIES}"
            )
        for cp, name in self.entries.items():
            if not (0 <= cp <= 0x10FFFF):
                raise TableFormatError(f"codepoint out of range: {cp:#x}")
            if cp <= 0x7F:
                raise TableFormatError(f"ASCII scalar {cp:#x} cannot be an emoji key")
            if not _NAME_RE.match(name):
                raise TableFormatError(f"bad name for {cp:#x}: {name!r}")
            # names must not contain table keys, or replacement would not
            # be idempotent; ASCII-only names make this structural
            if any(ord(c) in self.entries for c in name):
                raise TableFormatError(f"name for {cp:#x} contains a table key")


@dataclass(frozen=True)
class EmoticonLexicon:
    """ASCII glyph sequence -> replacement name, matched as whole tokens."""

    entries: Mapping[str, str]
    version: str

    def validate(self) -> None:
        for glyphs, name in self.entries.items():
            if not (2 <= len(glyphs) <= 5) or not glyphs.isascii():
                raise TableFormatError(f"bad emoticon key: {glyphs!r}")
            if any(c.isspace() for c in glyphs):
                raise TableFormatError(f"whitespace in emoticon key: {glyphs!r}")
            if not _NAME_RE.match(name):
                raise TableFormatError(f"bad name for {glyphs!r}: {name!r}")


@dataclass(frozen=True)
class SubstitutionResult:
    text: str
    emoji_replaced: int = 0
    emoticons_replaced: int = 0


def canonical_whitespace(text: str) -> str:
    """Collapse ASCII whitespace runs to single spaces and trim the ends.

    Keeps substituted text free of tabs/newlines so it survives the
    tab-separated interchange formats.
    """
    return _WS_RUN.sub(" ", text).strip()


def _read_table_lines(path_or_fh):
    if hasattr(path_or_fh, "read"):
        lines = path_or_fh.read().splitlines()
    else:
        with open(path_or_fh, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    version = ""
    records = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("version="):
                version = body[len("version="):]
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise TableFormatError(f"line {lineno}: expected 2 tab-separated fields")
        records.append((lineno, parts[0], parts[1]))
    return version, records


def load_emoji_table(path=None) -> EmojiTable:
    """Load `codepoint_hex<TAB>NAME` records; defaults to the packaged table."""
    if path is None:
        src = resources.files("tweetnorm.data").joinpath("emoji_names.tsv")
        with src.open("r", encoding="utf-8") as fh:
            version, records = _read_table_lines(fh)
    else:
        version, records = _read_table_lines(path)
    entries = {}
    for lineno, code, name in records:
        try:
            cp = int(code, 16)
        except ValueError:
            raise TableFormatError(f"line {lineno}: bad codepoint {code!r}") from None
        if cp in entries:
            raise TableFormatError(f"line {lineno}: duplicate codepoint {code}")
        entries[cp] = name
    table = EmojiTable(entries=entries, version=version)
    table.validate()
    return table


def load_emoticon_lexicon(path=None) -> EmoticonLexicon:
    """Load `glyphs<TAB>NAME` records; defaults to the packaged lexicon."""
    if path is None:
        src = resources.files("tweetnorm.data").joinpath("emoticons.tsv")
        with src.open("r", encoding="utf-8") as fh:
            version, records = _read_table_lines(fh)
    else:
        version, records = _read_table_lines(path)
    entries = {}
    for lineno, glyphs, name in records:
        if glyphs in entries:
            raise TableFormatError(f"line {lineno}: duplicate emoticon {glyphs!r}")
        entries[glyphs] = name
    lex = EmoticonLexicon(entries=entries, version=version)
    lex.validate()
    return lex


def _apply_emojis(text: str, table: EmojiTable, replace: bool) -> SubstitutionResult:
    entries = table.entries
    parts = []
    count = 0
    touched = False
    for c in text:
        cp = ord(c)
        if cp in entries:
            count += 1
            touched = True
            if replace:
                parts.append(" " + entries[cp] + " ")
        elif c == ZWJ:
            touched = True
        else:
            parts.append(c)
    out = "".join(parts)
    if touched:
        out = canonical_whitespace(out)
    return SubstitutionResult(text=out, emoji_replaced=count)


def replace_emojis(text: str, table: EmojiTable) -> SubstitutionResult:
    """Swap every table scalar for its space-padded name.

    Whitespace runs created by the substitution collapse to one space and
    the ends are trimmed; text without any table scalar comes back
    unchanged. The ZWJ glue of multi-scalar sequences is dropped, with each
    component scalar replaced by its own name.
    """
    return _apply_emojis(text, table, replace=True)


def strip_emojis(text: str, table: EmojiTable) -> SubstitutionResult:
    """Delete every table scalar (and ZWJ); the "no emoji" ablation arm."""
    return _apply_emojis(text, table, replace=False)


def _apply_emoticons(text: str, lexicon: EmoticonLexicon, replace: bool) -> SubstitutionResult:
    # keys match only when delimited by boundary/whitespace on both sides,
    # which reduces longest-match scanning to whole-token equality
    entries = lexicon.entries
    tokens = [t for t in _WS_RUN.split(text) if t]
    out = []
    count = 0
    for tok in tokens:
        name = entries.get(tok)
        if name is None:
            out.append(tok)
        else:
            count += 1
            if replace:
                out.append(name)
    if count == 0:
        return SubstitutionResult(text=text, emoticons_replaced=0)
    return SubstitutionResult(text=" ".join(out), emoticons_replaced=count)


def replace_emoticons(text: str, lexicon: EmoticonLexicon) -> SubstitutionResult:
    """Swap whitespace-delimited emoticon tokens for their names."""
    return _apply_emoticons(text, lexicon, replace=True)


def strip_emoticons(text: str, lexicon: EmoticonLexicon) -> SubstitutionResult:
    """Delete whitespace-delimited emoticon tokens."""
    return _apply_emoticons(text, lexicon, replace=False)
