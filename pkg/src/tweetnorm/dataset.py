"""Corpus ingestion, seeded shuffle/split, and train/val balance checks.

On-disk corpus format: one tweet per line, `account<TAB>gender<TAB>career<TAB>text`,
UTF-8, `#` comment lines. A `# format=bytes` or `# format=text` header says
whether the text column holds bytes literals (raw scrape rows) or already
decoded text; without the header each row is sniffed individually.

The split generator is pinned: PCG64 (numpy's permuted congruential
generator, 128-bit state) seeded with the split seed, driving an explicit
Fisher-Yates loop. Identical (ids, seed, val_fraction) give the identical
split on any platform.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bytes_literal import looks_like_bytes_literal

GENDERS = ("female", "male")
CAREERS = ("singer", "actor_actress", "media_personality", "athlete_sport_analyst", "other")

DEFAULT_TOL_GENDER = 0.02
DEFAULT_TOL_LEN_REL = 0.05


class CorpusFormatError(ValueError):
    """A corpus or split file doesn't match the documented line format."""


class EmptyCorpus(ValueError):
    """Asked to split a corpus with no tweets."""


@dataclass(frozen=True)
class Account:
    handle: str
    gender: str
    career: str = "other"

    def __post_init__(self):
        if self.gender not in GENDERS:
            raise ValueError(f"gender must be one of {GENDERS}, got {self.gender!r}")
        if self.career not in CAREERS:
            raise ValueError(f"career must be one of {CAREERS}, got {self.career!r}")


@dataclass(frozen=True)
class RawRecord:
    """One ingested tweet row. text holds a bytes literal when encoded=True."""

    id: str
    account: str
    gender: str
    career: str
    text: str
    encoded: bool = False


@dataclass
class Corpus:
    accounts: list[Account]
    tweets: list[RawRecord]
    provenance: str = ""

    def by_id(self) -> dict[str, RawRecord]:
        return {t.id: t for t in self.tweets}

    def account_genders(self) -> dict[str, str]:
        return {a.handle: a.gender for a in self.accounts}


@dataclass(frozen=True)
class DistributionSummary:
    n_tweets: int
    female_fraction: float
    mean_len: float
    max_len: int


@dataclass
class Split:
    train: list[str]
    val: list[str]
    seed: int
    val_fraction: float


@dataclass(frozen=True)
class BalanceViolation:
    statistic: str
    train_value: float
    val_value: float
    tolerance: float

    def __str__(self):
        return (
            f"{self.statistic}: train {self.train_value:.4f} vs val {self.val_value:.4f}"
            f" exceeds tolerance {self.tolerance:.4f}"
        )


def _digest(data: bytes) -> str:
    return hashlib.blake2b(data, digest_size=16).hexdigest()


def _parse_rows(lines: Iterable[str], source: str):
    declared_format = None
    rows = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n").rstrip("\r")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("format="):
                declared_format = body[len("format=") :].strip()
                if declared_format not in ("bytes", "text"):
                    raise CorpusFormatError(
                        f"{source}:{lineno}: format header must be bytes or text, got {declared_format!r}"
                    )
            continue
        rows.append((lineno, line))
    return declared_format, rows


def load_corpus(path) -> Corpus:
    """Read a corpus file. Tweet ids are assigned from file order (t000000, ...).

    Every handle must keep one gender and one career across its rows;
    conflicting rows are a format error, which is what pins the "tweet gender
    equals account gender" invariant at the ingestion boundary.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    declared_format, rows = _parse_rows(raw.decode("utf-8").splitlines(), str(path))

    tweets = []
    seen: dict[str, Account] = {}
    for ordinal, (lineno, line) in enumerate(rows):
        parts = line.split("\t", 3)
        if len(parts) != 4:
            raise CorpusFormatError(f"{path}:{lineno}: expected 4 tab-separated fields, got {len(parts)}")
        handle, gender, career, text = parts
        if not handle:
            raise CorpusFormatError(f"{path}:{lineno}: empty account handle")
        if gender not in GENDERS:
            raise CorpusFormatError(f"{path}:{lineno}: unknown gender {gender!r}")
        if career not in CAREERS:
            raise CorpusFormatError(f"{path}:{lineno}: unknown career {career!r}")
        prior = seen.get(handle)
        if prior is None:
            seen[handle] = Account(handle=handle, gender=gender, career=career)
        elif prior.gender != gender or prior.career != career:
            raise CorpusFormatError(
                f"{path}:{lineno}: account {handle!r} changed gender/career mid-file"
            )
        if declared_format is None:
            encoded = looks_like_bytes_literal(text)
        else:
            encoded = declared_format == "bytes"
        tweets.append(
            RawRecord(
                id=f"t{ordinal:06d}",
                account=handle,
                gender=gender,
                career=career,
                text=text,
                encoded=encoded,
            )
        )
    return Corpus(accounts=list(seen.values()), tweets=tweets, provenance=_digest(raw))


def load_accounts(path) -> list[Account]:
    """Read an accounts file: `handle<TAB>gender<TAB>career` rows, `#` comments."""
    with open(path, "rb") as fh:
        raw = fh.read()
    _, rows = _parse_rows(raw.decode("utf-8").splitlines(), str(path))
    accounts = []
    seen = set()
    for lineno, line in rows:
        parts = line.split("\t")
        if len(parts) != 3:
            raise CorpusFormatError(f"{path}:{lineno}: expected 3 tab-separated fields, got {len(parts)}")
        handle, gender, career = parts
        if handle in seen:
            raise CorpusFormatError(f"{path}:{lineno}: duplicate handle {handle!r}")
        seen.add(handle)
        try:
            accounts.append(Account(handle=handle, gender=gender, career=career))
        except ValueError as exc:
            raise CorpusFormatError(f"{path}:{lineno}: {exc}") from exc
    return accounts


def cross_check_accounts(corpus: Corpus, accounts: Sequence[Account]) -> list[str]:
    """Integrity check of a corpus against a separately maintained account list.

    Returns human-readable mismatches; empty means consistent. Accounts listed
    in the file but absent from the corpus are fine (not every account has to
    have tweets in a given dump).
    """
    table = {a.handle: a for a in accounts}
    problems = []
    for acct in corpus.accounts:
        ref = table.get(acct.handle)
        if ref is None:
            problems.append(f"{acct.handle}: present in corpus but not in accounts file")
        elif (ref.gender, ref.career) != (acct.gender, acct.career):
            problems.append(
                f"{acct.handle}: corpus says {acct.gender}/{acct.career},"
                f" accounts file says {ref.gender}/{ref.career}"
            )
    return problems


def _fisher_yates(items: list, seed: int) -> list:
    # explicit loop rather than rng.shuffle so the exact draw sequence is
    # part of the documented contract, not numpy's internals
    rng = np.random.Generator(np.random.PCG64(seed))
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        out[i], out[j] = out[j], out[i]
    return out


def shuffle_split_ids(ids: Sequence[str], seed: int, val_fraction: float) -> Split:
    """Fisher-Yates shuffle (PCG64, seeded), first floor(n*val_fraction) ids -> val."""
    if not 0 < val_fraction < 1:
        raise ValueError(f"val_fraction must be in (0, 1), got {val_fraction}")
    if not ids:
        raise EmptyCorpus("nothing to split")
    shuffled = _fisher_yates(list(ids), seed)
    n_val = math.floor(len(shuffled) * val_fraction)
    return Split(train=shuffled[n_val:], val=shuffled[:n_val], seed=seed, val_fraction=val_fraction)


def shuffle_split(corpus: Corpus, seed: int, val_fraction: float, by_account: bool = False) -> Split:
    """Seeded 75/25-style split of corpus tweet ids.

    Default granularity is the tweet, matching the study protocol (shuffle
    tweets, sample 25%). Warning: tweet-level splits leak author style, since
    one account's tweets land on both sides; by_account=True keeps each
    account wholly on one side instead. Account-level val takes the shortest
    prefix of shuffled accounts reaching at least floor(n*val_fraction)
    tweets, so |val| can overshoot the exact floor by up to one account.
    """
    if not corpus.tweets:
        raise EmptyCorpus("corpus has no tweets")
    if not by_account:
        return shuffle_split_ids([t.id for t in corpus.tweets], seed, val_fraction)

    if not 0 < val_fraction < 1:
        raise ValueError(f"val_fraction must be in (0, 1), got {val_fraction}")
    by_acct: dict[str, list[str]] = {}
    for t in corpus.tweets:
        by_acct.setdefault(t.account, []).append(t.id)
    handles = _fisher_yates(sorted(by_acct), seed)
    target = math.floor(len(corpus.tweets) * val_fraction)
    val: list[str] = []
    i = 0
    while i < len(handles) and len(val) < target:
        val.extend(by_acct[handles[i]])
        i += 1
    train = [tid for h in handles[i:] for tid in by_acct[h]]
    return Split(train=train, val=val, seed=seed, val_fraction=val_fraction)


def save_split(split: Split, path) -> None:
    lines = [f"# seed={split.seed}", f"# val_fraction={split.val_fraction!r}"]
    lines.extend(f"{tid}\ttrain" for tid in split.train)
    lines.extend(f"{tid}\tval" for tid in split.val)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_split(path) -> Split:
    seed = None
    val_fraction = None
    train: list[str] = []
    val: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("seed="):
                    seed = int(body[5:])
                elif body.startswith("val_fraction="):
                    val_fraction = float(body[13:])
                continue
            parts = line.split("\t")
            if len(parts) != 2 or parts[1] not in ("train", "val"):
                raise CorpusFormatError(f"{path}:{lineno}: expected `id<TAB>train|val`")
            (train if parts[1] == "train" else val).append(parts[0])
    if seed is None or val_fraction is None:
        raise CorpusFormatError(f"{path}: missing seed/val_fraction header")
    return Split(train=train, val=val, seed=seed, val_fraction=val_fraction)


def summarize(tweets: Sequence) -> DistributionSummary:
    """Distribution stats over anything with .gender and decoded .text.

    The mean is an integer sum of character lengths divided once at the end,
    so it is exact and independent of accumulation order (summarize is
    permutation-invariant by construction). Empty input gives all-zero stats.
    """
    n = len(tweets)
    if n == 0:
        return DistributionSummary(n_tweets=0, female_fraction=0.0, mean_len=0.0, max_len=0)
    female = 0
    total_len = 0
    max_len = 0
    for t in tweets:
        if t.gender == "female":
            female += 1
        ln = len(t.text)
        total_len += ln
        if ln > max_len:
            max_len = ln
    return DistributionSummary(
        n_tweets=n,
        female_fraction=female / n,
        mean_len=total_len / n,
        max_len=max_len,
    )


def check_balance(
    train: DistributionSummary,
    val: DistributionSummary,
    tol_gender: float = DEFAULT_TOL_GENDER,
    tol_len_rel: float = DEFAULT_TOL_LEN_REL,
) -> list[BalanceViolation]:
    """Train/val similarity gate on gender fraction and mean length.

    Gender tolerance is absolute, length tolerance is relative to the train
    mean. max_len is deliberately not gated: a single long outlier lands on
    one side or the other, so the max is too noisy an order statistic to
    fail a split over. It stays in the summary for reporting.
    """
    violations = []
    if abs(train.female_fraction - val.female_fraction) > tol_gender:
        violations.append(
            BalanceViolation(
                statistic="female_fraction",
                train_value=train.female_fraction,
                val_value=val.female_fraction,
                tolerance=tol_gender,
            )
        )
    len_tol = tol_len_rel * train.mean_len
    if abs(train.mean_len - val.mean_len) > len_tol:
        violations.append(
            BalanceViolation(
                statistic="mean_len",
                train_value=train.mean_len,
                val_value=val.mean_len,
                tolerance=len_tol,
            )
        )
    return violations
