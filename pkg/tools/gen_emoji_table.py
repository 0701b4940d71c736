#!/usr/bin/env python3
"""Regenerate src/tweetnorm/data/emoji_names.tsv from the Unicode database.

Covers the pictograph blocks that hold the emoji repertoire used in tweets.
Names come straight from the UCD name list, so entries like 1F620 -> ANGRY
FACE are verbatim. Run from the repo root after a Python/UCD upgrade.
"""

import re
import unicodedata
from pathlib import Path

# (first, last) inclusive codepoint ranges
BLOCKS = [
    (0x2600, 0x26FF),    # Miscellaneous Symbols
    (0x2700, 0x27BF),    # Dingbats
    (0x1F300, 0x1F5FF),  # Miscellaneous Symbols and Pictographs
    (0x1F600, 0x1F64F),  # Emoticons
    (0x1F680, 0x1F6FF),  # Transport and Map Symbols
    (0x1F900, 0x1F9FF),  # Supplemental Symbols and Pictographs
    (0x1FA70, 0x1FAFF),  # Symbols and Pictographs Extended-A
]

NAME_RE = re.compile(r"^[A-Z0-9][A-Z0-9 \-]*$")

REQUIRED = {
    0x1F620: "ANGRY FACE",
    0x1F609: "WINKING FACE",
    0x1F622: "CRYING FACE",
    0x1F62B: "TIRED FACE",
    0x1F635: "DIZZY FACE",
}


def collect():
    entries = {}
    for lo, hi in BLOCKS:
        for cp in range(lo, hi + 1):
            try:
                name = unicodedata.name(chr(cp))
            except ValueError:
                continue
            if not NAME_RE.match(name):
                continue
            entries[cp] = name
    return entries


def main():
    entries = collect()
    for cp, name in REQUIRED.items():
        assert entries.get(cp) == name, (hex(cp), entries.get(cp))
    assert len(entries) >= 842, len(entries)

    out = Path(__file__).resolve().parent.parent / "src" / "tweetnorm" / "data" / "emoji_names.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# emoji scalar -> replacement name, one per line\n")
        fh.write(f"# version=ucd-{unicodedata.unidata_version}\n")
        for cp in sorted(entries):
            fh.write(f"{cp:04X}\t{entries[cp]}\n")
    print(f"wrote {len(entries)} entries to {out}")


if __name__ == "__main__":
    main()
