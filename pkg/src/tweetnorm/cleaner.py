"""Retweet filtering, mention stripping, and the composed normalization pipeline.

The pipeline order is fixed: decode -> retweet filter -> mention handling ->
emoji handling -> emoticon handling -> whitespace normalization. The 2x2
ablation (mention handling x emoji handling) is expressed through
NormalizationConfig; TABLE3_GRID lists the four study variants in report
order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional

from .bytes_literal import decode_utf8, parse_bytes_literal
from .emoji import (
    EmojiTable,
    EmoticonLexicon,
    canonical_whitespace,
    replace_emojis,
    replace_emoticons,
    strip_emojis,
    strip_emoticons,
)

if TYPE_CHECKING:
    from .dataset import RawRecord

REPLACE = "replace_with_text"
STRIP = "strip"
KEEP = "keep_raw"
MODES = (REPLACE, STRIP, KEEP)

# Twitter's documented handle limit
MAX_HANDLE_LEN = 15

_HANDLE_RE = re.compile(r"@[A-Za-z0-9_]+")


@dataclass(frozen=True)
class NormalizationConfig:
    """Switches for one cell of the ablation grid."""

    strip_mentions: bool = False
    emoji_mode: str = REPLACE
    emoticon_mode: str = REPLACE
    drop_retweets: bool = True

    def __post_init__(self):
        if self.emoji_mode not in MODES:
            raise ValueError(f"emoji_mode must be one of {MODES}, got {self.emoji_mode!r}")
        if self.emoticon_mode not in MODES:
            raise ValueError(f"emoticon_mode must be one of {MODES}, got {self.emoticon_mode!r}")

    @property
    def label(self) -> str:
        """Report row name, matching the study's table convention."""
        mention = "No mention" if self.strip_mentions else "With mention"
        emoji = {REPLACE: "with emoji", STRIP: "no emoji", KEEP: "raw emoji"}[self.emoji_mode]
        name = f"{mention}+{emoji}"
        if not self.drop_retweets:
            name += "+keep retweets"
        return name

    @property
    def slug(self) -> str:
        return re.sub(r"[^a-z0-9]+", "_", self.label.lower()).strip("_")


# the four study variants, in the published row order; emoticon handling
# follows emoji handling in the grid
TABLE3_GRID = (
    NormalizationConfig(strip_mentions=False, emoji_mode=STRIP, emoticon_mode=STRIP),
    NormalizationConfig(strip_mentions=False, emoji_mode=REPLACE, emoticon_mode=REPLACE),
    NormalizationConfig(strip_mentions=True, emoji_mode=STRIP, emoticon_mode=STRIP),
    NormalizationConfig(strip_mentions=True, emoji_mode=REPLACE, emoticon_mode=REPLACE),
)


@dataclass(frozen=True)
class NormalizedTweet:
    id: str
    account: str
    gender: str
    text: str
    emoji_replaced: int = 0
    emoticons_replaced: int = 0
    mentions_stripped: int = 0


@dataclass
class DropCounts:
    retweets: int = 0
    empty: int = 0


def is_retweet(text: str) -> bool:
    """True iff the decoded text begins with "RT" then a space or "@".

    Case-sensitive on purpose: Twitter's own retweet prefix is uppercase,
    and a lowercase "rt ..." is ordinary text.
    """
    return text.startswith("RT") and len(text) > 2 and text[2] in (" ", "@")


def strip_mentions(text: str) -> tuple[str, int]:
    """Remove @handle tokens (1-15 word chars, non-alphanumeric left context).

    Runs of handle characters longer than the limit are not handles and stay
    put. Removal repeats to a fixed point so that a mention exposed by a
    previous removal (e.g. the "@y" in "@x@y") goes too; the result therefore
    contains no strippable mention at all.
    """
    total = 0
    while True:
        spans = []
        for m in _HANDLE_RE.finditer(text):
            if len(m.group()) - 1 > MAX_HANDLE_LEN:
                continue
            start = m.start()
            if start > 0 and text[start - 1].isalnum():
                continue
            spans.append((start, m.end()))
        if not spans:
            return text, total
        total += len(spans)
        parts = []
        prev = 0
        for start, end in spans:
            parts.append(text[prev:start])
            prev = end
        parts.append(text[prev:])
        text = canonical_whitespace("".join(parts))


def normalize(
    raw: "RawRecord",
    config: NormalizationConfig,
    table: EmojiTable,
    lexicon: EmoticonLexicon,
) -> Optional[NormalizedTweet]:
    """Run the full pipeline over one record.

    Returns None for records dropped as retweets or left empty by cleaning.
    MalformedLiteral propagates from encoded records that fail to parse.
    Known corner: cleaning can expose a leading "RT" (e.g. "@a RT hi" with
    mentions stripped); the retweet filter sees only the decoded input, so
    such output would be dropped if fed through again.
    """
    tweet, _ = _normalize_record(raw, config, table, lexicon)
    return tweet


def _normalize_record(raw, config, table, lexicon):
    if raw.encoded:
        text = decode_utf8(parse_bytes_literal(raw.text)).text
    else:
        text = raw.text

    if config.drop_retweets and is_retweet(text):
        return None, "retweet"

    mentions = 0
    if config.strip_mentions:
        text, mentions = strip_mentions(text)

    emoji_count = 0
    if config.emoji_mode == REPLACE:
        res = replace_emojis(text, table)
        text, emoji_count = res.text, res.emoji_replaced
    elif config.emoji_mode == STRIP:
        res = strip_emojis(text, table)
        text, emoji_count = res.text, res.emoji_replaced

    emoticon_count = 0
    if config.emoticon_mode == REPLACE:
        res = replace_emoticons(text, lexicon)
        text, emoticon_count = res.text, res.emoticons_replaced
    elif config.emoticon_mode == STRIP:
        res = strip_emoticons(text, lexicon)
        text, emoticon_count = res.text, res.emoticons_replaced

    text = canonical_whitespace(text)
    if not text:
        return None, "empty"

    return (
        NormalizedTweet(
            id=raw.id,
            account=raw.account,
            gender=raw.gender,
            text=text,
            emoji_replaced=emoji_count,
            emoticons_replaced=emoticon_count,
            mentions_stripped=mentions,
        ),
        None,
    )


def normalize_many(
    records: Iterable["RawRecord"],
    config: NormalizationConfig,
    table: EmojiTable,
    lexicon: EmoticonLexicon,
) -> tuple[list[NormalizedTweet], DropCounts]:
    """normalize() over records, with drop accounting.

    len(records) == len(tweets) + drops.retweets + drops.empty.
    """
    tweets = []
    drops = DropCounts()
    for raw in records:
        tweet, reason = _normalize_record(raw, config, table, lexicon)
        if tweet is not None:
            tweets.append(tweet)
        elif reason == "retweet":
            drops.retweets += 1
        else:
            drops.empty += 1
    return tweets, drops
