"""End-to-end ablation runs: one shared split, four normalization variants,
train/evaluate each, and a reproducible report bundle.

Protocol notes that matter for interpreting results:
- The split is computed once and its ids are reused for every grid config,
  so the only thing that varies across rows is the normalization.
- Retweets are dropped before splitting (when every config drops them, which
  the default grid does), so the pool is config-independent.
- The balance check runs on the decoded, retweet-filtered pool text, the one
  representation shared by all configs. On violation the split seed is bumped
  by 1 and retried; the seed actually used lands in the run header.
- Everything is seeded; a repeated run writes a byte-identical bundle.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .bytes_literal import decode_utf8, parse_bytes_literal, render_bytes_literal
from .cleaner import (
    TABLE3_GRID,
    DropCounts,
    NormalizationConfig,
    is_retweet,
    normalize_many,
)
from .classifier import Hyperparams, SingleClassCorpus, label_of, predict_many, train
from .dataset import (
    CAREERS,
    DEFAULT_TOL_GENDER,
    DEFAULT_TOL_LEN_REL,
    Account,
    Corpus,
    DistributionSummary,
    EmptyCorpus,
    RawRecord,
    Split,
    check_balance,
    load_corpus,
    save_split,
    shuffle_split_ids,
    summarize,
)
from .emoji import load_emoji_table, load_emoticon_lexicon
from .emotion import CrossTab, emotion_gender_report, load_emotion_lexicon, tag
from .metrics import (
    DEFAULT_THRESHOLD,
    ConfusionMatrix,
    MetricsRow,
    confusion,
    confusion_tsv,
    per_class_scores,
    render_confusion_text,
    render_records,
    render_table,
    scores,
)

BACKENDS = ("baseline", "external_predictions")
PROFILES = ("none", "emoji-signal", "mention-signal", "token-signal")


class BalanceRetriesExhausted(RuntimeError):
    pass


class InvalidProfile(ValueError):
    pass


@dataclass
class ExperimentSpec:
    corpus_path: Optional[str] = None
    seed: int = 0
    val_fraction: float = 0.25
    hyperparams: Hyperparams = field(default_factory=Hyperparams)
    grid: tuple = TABLE3_GRID
    backend: str = "baseline"
    # config label -> predictions file, for backend=external_predictions
    predictions_paths: Optional[dict] = None
    tol_gender: float = DEFAULT_TOL_GENDER
    tol_len_rel: float = DEFAULT_TOL_LEN_REL
    max_balance_retries: int = 100
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if not self.grid:
            raise ValueError("grid must be nonempty")
        labels = [c.label for c in self.grid]
        if len(set(labels)) != len(labels):
            raise ValueError(f"grid config names must be unique, got {labels}")
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")


@dataclass
class ConfigResult:
    config: NormalizationConfig
    metrics: MetricsRow
    per_class: dict
    cm: ConfusionMatrix
    train_summary: DistributionSummary
    val_summary: DistributionSummary
    drops: DropCounts
    emotion: CrossTab
    train_rows: list  # (id, label, normalized_text)
    val_rows: list
    predictions: list  # (id, probability_female)


@dataclass
class ExperimentResult:
    corpus_digest: str
    backend: str
    seed_requested: int
    seed_used: int
    val_fraction: float
    n_raw: int
    retweets_dropped: int
    decode_replacements: int
    split: Split
    pool_train_summary: DistributionSummary
    pool_val_summary: DistributionSummary
    configs: list


def decode_records(tweets: Sequence[RawRecord]):
    decoded = []
    replacements = 0
    for t in tweets:
        if t.encoded:
            d = decode_utf8(parse_bytes_literal(t.text))
            replacements += d.replacement_count
            decoded.append(replace(t, text=d.text, encoded=False))
        else:
            decoded.append(t)
    return decoded, replacements


def run_grid(spec: ExperimentSpec, corpus: Optional[Corpus] = None) -> ExperimentResult:
    if corpus is None:
        corpus = load_corpus(spec.corpus_path)
    if not corpus.tweets:
        raise EmptyCorpus("corpus has no tweets")

    decoded, decode_replacements = decode_records(corpus.tweets)

    if all(c.drop_retweets for c in spec.grid):
        pool = [t for t in decoded if not is_retweet(t.text)]
    else:
        # a config wants retweets kept, so they stay in the split pool and
        # each config's own normalization decides their fate
        pool = decoded
    retweets_dropped = len(decoded) - len(pool)
    if not pool:
        raise EmptyCorpus("every tweet was a retweet")
    if len({t.gender for t in pool}) < 2:
        raise SingleClassCorpus("corpus needs tweets from both genders")

    ids = [t.id for t in pool]
    by_id = {t.id: t for t in pool}
    seed_used = spec.seed
    last_violations = None
    for _ in range(spec.max_balance_retries + 1):
        split = shuffle_split_ids(ids, seed_used, spec.val_fraction)
        pool_train = summarize([by_id[i] for i in split.train])
        pool_val = summarize([by_id[i] for i in split.val])
        violations = check_balance(pool_train, pool_val, spec.tol_gender, spec.tol_len_rel)
        if not violations:
            break
        last_violations = violations
        seed_used += 1
    else:
        raise BalanceRetriesExhausted(
            f"no balanced split within {spec.max_balance_retries} reseeds from seed"
            f" {spec.seed}; last violations: {'; '.join(str(v) for v in last_violations)}"
        )

    table = load_emoji_table()
    emoticons = load_emoticon_lexicon()
    emotion_lex = load_emotion_lexicon()

    results = []
    for config in spec.grid:
        tweets, drops = normalize_many(pool, config, table, emoticons)
        norm_by_id = {t.id: t for t in tweets}
        train_tweets = [norm_by_id[i] for i in split.train if i in norm_by_id]
        val_tweets = [norm_by_id[i] for i in split.val if i in norm_by_id]
        train_rows = [(t.id, label_of(t.gender), t.text) for t in train_tweets]
        val_rows = [(t.id, label_of(t.gender), t.text) for t in val_tweets]

        if spec.backend == "baseline":
            model = train([(text, y) for _, y, text in train_rows], spec.hyperparams)
            probs = predict_many(model, [text for _, _, text in val_rows])
            predictions = [(rid, float(p)) for (rid, _, _), p in zip(val_rows, probs)]
        else:
            if not spec.predictions_paths or config.label not in spec.predictions_paths:
                raise ValueError(f"no predictions file for config {config.label!r}")
            pred_map = dict(read_predictions(spec.predictions_paths[config.label]))
            missing = [rid for rid, _, _ in val_rows if rid not in pred_map]
            if missing:
                raise ValueError(
                    f"predictions for {config.label!r} missing {len(missing)} val ids"
                    f" (first: {missing[0]})"
                )
            predictions = [(rid, pred_map[rid]) for rid, _, _ in val_rows]

        cm = confusion([p for _, p in predictions], [y for _, y, _ in val_rows], spec.threshold)
        row = scores(cm, config.label)
        items = [
            (tag(t.text, emotion_lex), "female" if p >= spec.threshold else "male")
            for t, (_, p) in zip(val_tweets, predictions)
        ]
        results.append(
            ConfigResult(
                config=config,
                metrics=row,
                per_class=per_class_scores(cm, config.label),
                cm=cm,
                train_summary=summarize(train_tweets),
                val_summary=summarize(val_tweets),
                drops=drops,
                emotion=emotion_gender_report(items),
                train_rows=train_rows,
                val_rows=val_rows,
                predictions=predictions,
            )
        )

    return ExperimentResult(
        corpus_digest=corpus.provenance,
        backend=spec.backend,
        seed_requested=spec.seed,
        seed_used=seed_used,
        val_fraction=spec.val_fraction,
        n_raw=len(decoded),
        retweets_dropped=retweets_dropped,
        decode_replacements=decode_replacements,
        split=split,
        pool_train_summary=pool_train,
        pool_val_summary=pool_val,
        configs=results,
    )


# ---------------------------------------------------------------------------
# interchange files (the boundary an external classification backend sees)


def write_interchange(path, rows) -> None:
    """rows: (id, label, normalized_text); label 1 = female, 0 = male."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# id\tlabel\ttext\n")
        for rid, y, text in rows:
            if "\t" in text or "\n" in text or "\r" in text:
                raise ValueError(f"normalized text for {rid} carries tab/newline")
            fh.write(f"{rid}\t{y}\t{text}\n")


def read_interchange(path) -> list:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t", 2)
            if len(parts) != 3 or parts[1] not in ("0", "1"):
                raise ValueError(f"{path}:{lineno}: expected `id<TAB>0|1<TAB>text`")
            rows.append((parts[0], int(parts[1]), parts[2]))
    return rows


def write_predictions(path, pairs) -> None:
    """pairs: (id, probability_female)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# id\tprobability_female\n")
        for rid, p in pairs:
            fh.write(f"{rid}\t{p!r}\n")


def read_predictions(path) -> list:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected `id<TAB>probability`")
            p = float(parts[1])
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{path}:{lineno}: probability {p} outside [0, 1]")
            pairs.append((parts[0], p))
    return pairs


# ---------------------------------------------------------------------------
# report bundle


def _config_digest(config: NormalizationConfig) -> str:
    return hashlib.blake2b(repr(config).encode("utf-8"), digest_size=8).hexdigest()


def render_run_header(result: ExperimentResult) -> str:
    lines = [
        "# ablation run",
        f"corpus_digest={result.corpus_digest}",
        f"backend={result.backend}",
        f"seed_requested={result.seed_requested}",
        f"seed_used={result.seed_used}",
        f"val_fraction={result.val_fraction!r}",
        f"n_raw={result.n_raw}",
        f"retweets_dropped={result.retweets_dropped}",
        f"decode_replacements={result.decode_replacements}",
        f"train_size={len(result.split.train)}",
        f"val_size={len(result.split.val)}",
    ]
    for side, s in (("train", result.pool_train_summary), ("val", result.pool_val_summary)):
        lines.append(
            f"pool_{side}: n={s.n_tweets} female_fraction={s.female_fraction!r}"
            f" mean_len={s.mean_len!r} max_len={s.max_len}"
        )
    for c in result.configs:
        lines.append(
            f"config {c.config.slug}: digest={_config_digest(c.config)}"
            f" dropped_retweets={c.drops.retweets} dropped_empty={c.drops.empty}"
        )
    return "\n".join(lines) + "\n"


def render_per_class_records(configs: Sequence[ConfigResult]) -> str:
    lines = ["# config\tclass\taccuracy\tprecision\trecall"]
    for c in configs:
        for cls in ("female", "male", "macro"):
            r = c.per_class[cls]
            lines.append(f"{c.config.label}\t{cls}\t{r.accuracy!r}\t{r.precision!r}\t{r.recall!r}")
    return "\n".join(lines) + "\n"


def write_report_bundle(result: ExperimentResult, out_dir, figures: bool = True) -> Path:
    """Write the full bundle under out_dir; returns the directory path.

    Contents are fully determined by the result (no timestamps, fixed float
    rendering), so two runs of the same spec produce byte-identical trees.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    def put(name, text):
        with open(out / name, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)

    put("run_header.txt", render_run_header(result))
    save_split(result.split, out / "split.tsv")
    put("metrics.txt", render_table([c.metrics for c in result.configs]))
    put("metrics.tsv", render_records([(c.metrics, c.cm) for c in result.configs]))
    put("metrics_per_class.tsv", render_per_class_records(result.configs))

    for c in result.configs:
        slug = c.config.slug
        write_interchange(out / f"{slug}_train.tsv", c.train_rows)
        write_interchange(out / f"{slug}_val.tsv", c.val_rows)
        write_predictions(out / f"{slug}_predictions.tsv", c.predictions)
        put(f"{slug}_confusion.tsv", confusion_tsv(c.cm))
        put(f"{slug}_confusion.txt", render_confusion_text(c.cm))
        put(f"{slug}_emotion.tsv", c.emotion.render_tsv())
        put(f"{slug}_emotion.txt", c.emotion.render_text())

    if figures:
        # imported lazily so library users don't pay the matplotlib import
        from .figures import confusion_heatmap, metrics_bars

        for c in result.configs:
            confusion_heatmap(c.cm, out / f"{c.config.slug}_confusion.png", title=c.config.label)
        metrics_bars([c.metrics for c in result.configs], out / "metrics.png")
    return out


# ---------------------------------------------------------------------------
# synthetic corpus


NEUTRAL_VOCAB = (
    "the and for with just really today tomorrow morning night coffee lunch dinner "
    "game show travel airport hotel city studio session practice rehearsal weekend "
    "monday friday sunday new old good great long short early late home road tour "
    "team crew fans friends family music song album match score photo video live "
    "stream break work start finish thanks everyone love time day week year café over"
).split()

FEMALE_TOKENS = ("velvet", "blossom", "rosegold", "shimmer", "tiara")
MALE_TOKENS = ("gridiron", "quarterback", "barbell", "octane", "torque")

FEMALE_HANDLES = ("@glamdaily", "@poproyalty", "@divastyle")
MALE_HANDLES = ("@lockerroom", "@gymrat_hq", "@motorclub")
SHARED_HANDLES = ("@dailyupdates", "@backstagecrew")
RT_SOURCES = ("newswire", "updates", "dailyfeed")

FEMALE_EMOJI = ("\U0001F609", "\U0001F60D", "\U0001F622")  # wink, heart-eyes, crying
MALE_EMOJI = ("\U0001F620", "\U0001F62B", "\U0001F635")  # angry, tired, dizzy
SHARED_EMOJI = ("☀", "❤")
SHARED_EMOTICONS = (":)", ":-(", ":D")

SIGNAL_RATE = 0.9


def _pick(rng, seq):
    return seq[int(rng.integers(0, len(seq)))]


def _apportion(total: int, weights: np.ndarray) -> np.ndarray:
    """Largest-remainder split of `total` into len(weights) integer parts."""
    share = weights / weights.sum()
    raw = share * total
    base = np.floor(raw).astype(int)
    short = total - int(base.sum())
    if short > 0:
        order = np.argsort(-(raw - base), kind="stable")
        base[order[:short]] += 1
    return base


def generate_synthetic_corpus(
    seed: int,
    n_accounts: int,
    n_tweets: int,
    signal_profile: str,
    female_fraction: float = 0.5,
    retweet_rate: float = 0.15,
) -> Corpus:
    """Deterministic fixture corpus with a controllable gender signal.

    Tweet counts per account follow a lognormal skew (a few prolific
    accounts, a long tail). The gender split of tweets is exact:
    round(n_tweets * female_fraction) tweets come from female accounts.
    signal_profile picks where (if anywhere) the label signal lives:

    - none: no feature correlates with gender; classifiers should sit at
      chance on held-out data
    - emoji-signal: gendered emoji appended at rate 0.9; signal survives
      emoji replacement, dies under emoji stripping
    - mention-signal: gendered @handles at rate 0.9; dies under mention
      stripping
    - token-signal: gendered plain words at rate 0.9; survives every config

    Gender-independent garnish (shared emoji, emoticons, shared mentions,
    retweet prefixes) exercises the cleaning paths without adding signal.
    """
    if signal_profile not in PROFILES:
        raise InvalidProfile(f"signal_profile must be one of {PROFILES}, got {signal_profile!r}")
    if n_accounts < 2:
        raise ValueError("need at least 2 accounts (one per gender)")
    if n_tweets < 2:
        raise ValueError("need at least 2 tweets")
    if not 0 < female_fraction < 1:
        raise ValueError(f"female_fraction must be in (0, 1), got {female_fraction}")

    rng = np.random.Generator(np.random.PCG64(seed))
    n_female_acc = max(1, n_accounts // 2)
    accounts = []
    for i in range(n_accounts):
        gender = "female" if i < n_female_acc else "male"
        accounts.append(
            Account(handle=f"acct{i:03d}", gender=gender, career=_pick(rng, CAREERS))
        )

    weights = rng.lognormal(mean=0.0, sigma=1.2, size=n_accounts)
    n_female_tweets = round(n_tweets * female_fraction)
    counts = np.zeros(n_accounts, dtype=int)
    fem = slice(0, n_female_acc)
    mal = slice(n_female_acc, n_accounts)
    counts[fem] = _apportion(n_female_tweets, weights[fem])
    counts[mal] = _apportion(n_tweets - n_female_tweets, weights[mal])

    tweets = []
    ordinal = 0
    for acct, count in zip(accounts, counts):
        for _ in range(int(count)):
            n_words = int(rng.integers(6, 13))
            words = [NEUTRAL_VOCAB[int(j)] for j in rng.integers(0, len(NEUTRAL_VOCAB), size=n_words)]
            text = " ".join(words)
            female = acct.gender == "female"
            if signal_profile == "token-signal" and rng.random() < SIGNAL_RATE:
                text += " " + _pick(rng, FEMALE_TOKENS if female else MALE_TOKENS)
            elif signal_profile == "mention-signal" and rng.random() < SIGNAL_RATE:
                text += " " + _pick(rng, FEMALE_HANDLES if female else MALE_HANDLES)
            elif signal_profile == "emoji-signal" and rng.random() < SIGNAL_RATE:
                text += " " + _pick(rng, FEMALE_EMOJI if female else MALE_EMOJI)
            if rng.random() < 0.2:
                text += " " + _pick(rng, SHARED_EMOJI)
            if rng.random() < 0.15:
                text += " " + _pick(rng, SHARED_EMOTICONS)
            if signal_profile != "mention-signal" and rng.random() < 0.1:
                text += " " + _pick(rng, SHARED_HANDLES)
            if rng.random() < retweet_rate:
                text = f"RT @{_pick(rng, RT_SOURCES)}: {text}"
            tweets.append(
                RawRecord(
                    id=f"t{ordinal:06d}",
                    account=acct.handle,
                    gender=acct.gender,
                    career=acct.career,
                    text=text,
                    encoded=False,
                )
            )
            ordinal += 1

    provenance = f"synthetic:seed={seed}:profile={signal_profile}:accounts={n_accounts}:tweets={n_tweets}"
    return Corpus(accounts=accounts, tweets=tweets, provenance=provenance)


def write_corpus(corpus: Corpus, path, fmt: str = "bytes") -> None:
    """Serialize a decoded corpus; fmt=bytes writes each text as a bytes
    literal (exact on-disk byte fidelity), fmt=text writes it verbatim."""
    if fmt not in ("bytes", "text"):
        raise ValueError(f"fmt must be bytes or text, got {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# format={fmt}\n")
        for t in corpus.tweets:
            if t.encoded:
                raise ValueError(f"record {t.id} is already encoded; write_corpus expects decoded text")
            if fmt == "bytes":
                text = render_bytes_literal(t.text.encode("utf-8"))
            else:
                if "\t" in t.text or "\n" in t.text or "\r" in t.text:
                    raise ValueError(f"record {t.id} carries tab/newline; use fmt=bytes")
                text = t.text
            fh.write(f"{t.account}\t{t.gender}\t{t.career}\t{text}\n")
