"""Bag-of-words emotion scoring over five classes, plus neutral.

The lexicon is a small versioned word list shipped with the package; it
approximates the behavior of off-the-shelf emotion taggers without binding
one as a dependency. Scoring is deliberately naive: lowercase alphanumeric
tokens, count lexicon hits per class, normalize by total hits. A text with
no hits is neutral.

This runs on normalized text on purpose: emoji substitution turns a face
glyph into words like "ANGRY FACE", which the tokenizer lowercases into a
lexicon hit, so substituted emoji carry their emotion into the tally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .metrics import EmptyInput

EMOTIONS = ("angry", "fear", "happy", "sad", "surprise")
NEUTRAL = "neutral"

_TOKEN_RE = re.compile(r"[a-z0-9]+")


class LexiconFormatError(ValueError):
    pass


@dataclass(frozen=True)
class EmotionLexicon:
    words: dict  # word -> emotion label
    version: str = ""

    def validate(self):
        for word, label in self.words.items():
            if word != word.lower():
                raise LexiconFormatError(f"lexicon keys must be lowercase: {word!r}")
            if label not in EMOTIONS:
                raise LexiconFormatError(f"unknown emotion {label!r} for word {word!r}")
        return self


@dataclass(frozen=True)
class EmotionScores:
    angry: float = 0.0
    fear: float = 0.0
    happy: float = 0.0
    sad: float = 0.0
    surprise: float = 0.0
    dominant: str = NEUTRAL

    def as_dict(self) -> dict:
        return {e: getattr(self, e) for e in EMOTIONS}


def load_emotion_lexicon(path=None) -> EmotionLexicon:
    """Read `word<TAB>emotion` records; defaults to the packaged lexicon."""
    if path is None:
        source = resources.files("tweetnorm.data").joinpath("emotion_lexicon.tsv")
        text = source.read_text(encoding="utf-8")
        name = "emotion_lexicon.tsv"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        name = str(path)
    version = ""
    words: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("version="):
                version = body[len("version=") :].strip()
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(f"{name}:{lineno}: expected `word<TAB>emotion`")
        word, label = parts
        if word in words:
            raise LexiconFormatError(f"{name}:{lineno}: duplicate word {word!r}")
        words[word] = label
    return EmotionLexicon(words=words, version=version).validate()


def tag(text: str, lex: EmotionLexicon) -> EmotionScores:
    """Score one text. Bag-of-words: token order never matters."""
    counts = dict.fromkeys(EMOTIONS, 0)
    total = 0
    for tok in _TOKEN_RE.findall(text.lower()):
        label = lex.words.get(tok)
        if label is not None:
            counts[label] += 1
            total += 1
    if total == 0:
        return EmotionScores()
    scores = {e: counts[e] / total for e in EMOTIONS}
    # first max in the fixed label order wins ties
    dominant = max(EMOTIONS, key=lambda e: (scores[e], -EMOTIONS.index(e)))
    return EmotionScores(dominant=dominant, **scores)


@dataclass(frozen=True)
class CrossTab:
    """Counts of dominant emotion (rows, five classes + neutral) by predicted
    gender (columns)."""

    counts: tuple  # ((row_label, female_count, male_count), ...) in fixed row order

    @property
    def total(self) -> int:
        return sum(f + m for _, f, m in self.counts)

    def fractions(self):
        """Row-normalized (female_frac, male_frac) per row; empty rows give zeros."""
        out = []
        for label, f, m in self.counts:
            n = f + m
            if n == 0:
                out.append((label, 0.0, 0.0))
            else:
                out.append((label, f / n, m / n))
        return out

    def render_text(self) -> str:
        lines = [f"{'emotion':<10}  {'female':>6}  {'male':>6}  {'female_frac':>11}  {'male_frac':>9}"]
        for (label, f, m), (_, ff, mf) in zip(self.counts, self.fractions()):
            lines.append(f"{label:<10}  {f:>6}  {m:>6}  {ff:>11.4f}  {mf:>9.4f}")
        return "\n".join(lines) + "\n"

    def render_tsv(self) -> str:
        lines = ["# emotion\tfemale\tmale\tfemale_frac\tmale_frac"]
        for (label, f, m), (_, ff, mf) in zip(self.counts, self.fractions()):
            lines.append(f"{label}\t{f}\t{m}\t{ff:.4f}\t{mf:.4f}")
        return "\n".join(lines) + "\n"


def emotion_gender_report(items: Sequence[tuple[EmotionScores, str]]) -> CrossTab:
    """Cross-tabulate dominant emotion against predicted gender."""
    if not items:
        raise EmptyInput("no items to tabulate")
    rows = EMOTIONS + (NEUTRAL,)
    counts = {r: {"female": 0, "male": 0} for r in rows}
    for scores, gender in items:
        if gender not in ("female", "male"):
            raise ValueError(f"predicted gender must be female or male, got {gender!r}")
        counts[scores.dominant][gender] += 1
    return CrossTab(counts=tuple((r, counts[r]["female"], counts[r]["male"]) for r in rows))
