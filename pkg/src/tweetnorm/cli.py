"""Command line front end: normalize, split, train, evaluate, ablate,
emotion-report, synth."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bytes_literal import MalformedLiteral
from .cleaner import KEEP, REPLACE, STRIP, TABLE3_GRID, NormalizationConfig, is_retweet, normalize_many
from .classifier import Hyperparams, SingleClassCorpus, label_of, load_model, predict_many, save_model, train
from .dataset import (
    Corpus,
    CorpusFormatError,
    EmptyCorpus,
    check_balance,
    load_corpus,
    save_split,
    shuffle_split,
    summarize,
)
from .emoji import TableFormatError, load_emoji_table, load_emoticon_lexicon
from .emotion import emotion_gender_report, load_emotion_lexicon, tag
from .metrics import confusion, confusion_tsv, render_confusion_text, render_records, render_table, scores
from .runner import (
    BalanceRetriesExhausted,
    ExperimentSpec,
    InvalidProfile,
    PROFILES,
    decode_records,
    generate_synthetic_corpus,
    read_interchange,
    read_predictions,
    run_grid,
    write_corpus,
    write_interchange,
    write_predictions,
    write_report_bundle,
)

EMOJI_MODES = {"replace": REPLACE, "strip": STRIP, "keep": KEEP}


def _config_from_args(args) -> NormalizationConfig:
    if getattr(args, "config", None):
        for c in TABLE3_GRID:
            if args.config in (c.label, c.slug):
                return c
        known = ", ".join(c.slug for c in TABLE3_GRID)
        raise ValueError(f"unknown config {args.config!r}; known: {known}")
    mode = EMOJI_MODES[args.emoji_mode]
    # emoticon handling follows the emoji switch, as in the study grid
    return NormalizationConfig(
        strip_mentions=args.strip_mentions,
        emoji_mode=mode,
        emoticon_mode=mode,
        drop_retweets=not args.keep_retweets,
    )


def _add_config_flags(p):
    p.add_argument("--config", help="named grid config (label or slug) instead of the flags below")
    p.add_argument("--strip-mentions", action="store_true", help="remove @handles")
    p.add_argument(
        "--emoji-mode", choices=sorted(EMOJI_MODES), default="replace",
        help="replace emoji with names, strip them, or keep them raw (default: replace)",
    )
    p.add_argument("--keep-retweets", action="store_true", help="do not drop RT-prefixed tweets")


def _parse_ngrams(text):
    if text.lower() in ("none", "off"):
        return None
    lo, hi = text.split(",")
    return (int(lo), int(hi))


def _hyperparams_from_args(args) -> Hyperparams:
    return Hyperparams(
        dims=args.dims,
        word_ngrams=_parse_ngrams(args.word_ngrams),
        char_ngrams=_parse_ngrams(args.char_ngrams),
        lr=args.lr,
        epochs=args.epochs,
        l2=args.l2,
        dropout=args.dropout,
        seed=args.model_seed,
    )


def _add_hyperparam_flags(p):
    p.add_argument("--dims", type=int, default=2**18)
    p.add_argument("--word-ngrams", default="1,2", help='"lo,hi" or "none"')
    p.add_argument("--char-ngrams", default="3,5", help='"lo,hi" or "none"')
    p.add_argument("--lr", type=float, default=0.1)
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--l2", type=float, default=1e-6)
    p.add_argument("--dropout", type=float, default=0.1)
    p.add_argument("--model-seed", type=int, default=0, help="training RNG seed")


def cmd_normalize(args) -> int:
    corpus = load_corpus(args.corpus)
    config = _config_from_args(args)
    tweets, drops = normalize_many(
        corpus.tweets, config, load_emoji_table(), load_emoticon_lexicon()
    )
    write_interchange(args.out, [(t.id, label_of(t.gender), t.text) for t in tweets])
    print(
        f"{config.label}: wrote {len(tweets)} rows to {args.out}"
        f" (dropped {drops.retweets} retweets, {drops.empty} empty)"
    )
    return 0


def cmd_split(args) -> int:
    corpus = load_corpus(args.corpus)
    records, _ = decode_records(corpus.tweets)
    if not args.keep_retweets:
        records = [t for t in records if not is_retweet(t.text)]
    pool = Corpus(accounts=corpus.accounts, tweets=records, provenance=corpus.provenance)
    split = shuffle_split(pool, args.seed, args.val_fraction, by_account=args.by_account)
    by_id = pool.by_id()
    tr = summarize([by_id[i] for i in split.train])
    va = summarize([by_id[i] for i in split.val])
    violations = check_balance(tr, va)
    save_split(split, args.out)
    print(f"split {len(split.train)} train / {len(split.val)} val -> {args.out}")
    for side, s in (("train", tr), ("val", va)):
        print(
            f"{side}: n={s.n_tweets} female_fraction={s.female_fraction:.4f}"
            f" mean_len={s.mean_len:.2f} max_len={s.max_len}"
        )
    for v in violations:
        print(f"balance violation: {v}")
    return 1 if violations else 0


def cmd_train(args) -> int:
    rows = read_interchange(args.train_file)
    model = train([(text, y) for _, y, text in rows], _hyperparams_from_args(args))
    save_model(model, args.out)
    print(f"trained on {len(rows)} examples; model -> {args.out}")
    return 0


def cmd_evaluate(args) -> int:
    rows = read_interchange(args.val_file)
    if args.model:
        model = load_model(args.model)
        probs = predict_many(model, [text for _, _, text in rows])
        pairs = [(rid, float(p)) for (rid, _, _), p in zip(rows, probs)]
        if args.out_predictions:
            write_predictions(args.out_predictions, pairs)
    else:
        pred_map = dict(read_predictions(args.predictions))
        missing = [rid for rid, _, _ in rows if rid not in pred_map]
        if missing:
            raise ValueError(f"predictions missing {len(missing)} ids (first: {missing[0]})")
        pairs = [(rid, pred_map[rid]) for rid, _, _ in rows]
    cm = confusion([p for _, p in pairs], [y for _, y, _ in rows], args.threshold)
    row = scores(cm, args.name or Path(args.val_file).stem)
    print(render_table([row]), end="")
    print(render_confusion_text(cm), end="")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "metrics.tsv").write_text(render_records([(row, cm)]), encoding="utf-8")
        (out / "confusion.tsv").write_text(confusion_tsv(cm), encoding="utf-8")
        print(f"metrics -> {out}")
    return 0


def cmd_ablate(args) -> int:
    predictions_paths = None
    if args.backend == "external_predictions":
        if not args.predictions_dir:
            raise ValueError("--predictions-dir is required with backend=external_predictions")
        predictions_paths = {
            c.label: str(Path(args.predictions_dir) / f"{c.slug}_predictions.tsv")
            for c in TABLE3_GRID
        }
    spec = ExperimentSpec(
        corpus_path=args.corpus,
        seed=args.seed,
        val_fraction=args.val_fraction,
        hyperparams=_hyperparams_from_args(args),
        backend=args.backend,
        predictions_paths=predictions_paths,
        threshold=args.threshold,
    )
    result = run_grid(spec)
    out = write_report_bundle(result, args.out_dir, figures=not args.no_figures)
    print(render_table([c.metrics for c in result.configs]), end="")
    if result.seed_used != result.seed_requested:
        print(f"note: balance retries moved the split seed {result.seed_requested} -> {result.seed_used}")
    print(f"report bundle -> {out}")
    return 0


def cmd_emotion_report(args) -> int:
    rows = read_interchange(args.val_file)
    pred_map = dict(read_predictions(args.predictions))
    missing = [rid for rid, _, _ in rows if rid not in pred_map]
    if missing:
        raise ValueError(f"predictions missing {len(missing)} ids (first: {missing[0]})")
    lex = load_emotion_lexicon()
    items = [
        (tag(text, lex), "female" if pred_map[rid] >= args.threshold else "male")
        for rid, _, text in rows
    ]
    xtab = emotion_gender_report(items)
    print(xtab.render_text(), end="")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(xtab.render_tsv())
        print(f"cross-tab -> {args.out}")
    return 0


def cmd_synth(args) -> int:
    corpus = generate_synthetic_corpus(
        seed=args.seed,
        n_accounts=args.n_accounts,
        n_tweets=args.n_tweets,
        signal_profile=args.profile,
        female_fraction=args.female_fraction,
        retweet_rate=args.retweet_rate,
    )
    write_corpus(corpus, args.out, fmt=args.format)
    print(
        f"wrote {len(corpus.tweets)} tweets from {len(corpus.accounts)} accounts"
        f" (profile={args.profile}, format={args.format}) -> {args.out}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetnorm",
        description="tweet normalization and gender-polarity ablation toolkit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normalize a corpus into id/label/text rows")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    _add_config_flags(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("split", help="seeded train/val split with balance report")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--val-fraction", type=float, default=0.25)
    p.add_argument("--by-account", action="store_true",
                   help="keep each account wholly on one side (see shuffle_split docs)")
    p.add_argument("--keep-retweets", action="store_true")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("train", help="train the hashed n-gram baseline")
    p.add_argument("--train-file", required=True, help="id<TAB>label<TAB>text rows")
    p.add_argument("--out", required=True, help="model JSON path")
    _add_hyperparam_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="score a model or a predictions file against labels")
    p.add_argument("--val-file", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--model", help="model JSON to run")
    src.add_argument("--predictions", help="pre-computed id<TAB>probability rows")
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--name", default="", help="config name for the metrics row")
    p.add_argument("--out-predictions", help="write model probabilities here")
    p.add_argument("--out-dir", help="write metrics.tsv/confusion.tsv here")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ablate", help="run the full four-config grid and write a report bundle")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--val-fraction", type=float, default=0.25)
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--backend", choices=["baseline", "external_predictions"], default="baseline")
    p.add_argument("--predictions-dir",
                   help="directory of <slug>_predictions.tsv files for the external backend")
    p.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    _add_hyperparam_flags(p)
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("emotion-report", help="emotion vs predicted-gender cross-tab")
    p.add_argument("--val-file", required=True)
    p.add_argument("--predictions", required=True)
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--out", help="also write the TSV here")
    p.set_defaults(func=cmd_emotion_report)

    p = sub.add_parser("synth", help="generate a deterministic synthetic corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-accounts", type=int, default=30)
    p.add_argument("--n-tweets", type=int, default=1000)
    p.add_argument("--profile", choices=PROFILES, default="emoji-signal")
    p.add_argument("--format", choices=["bytes", "text"], default="bytes")
    p.add_argument("--female-fraction", type=float, default=0.5)
    p.add_argument("--retweet-rate", type=float, default=0.15)
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        MalformedLiteral,
        CorpusFormatError,
        TableFormatError,
        EmptyCorpus,
        SingleClassCorpus,
        InvalidProfile,
        BalanceRetriesExhausted,
        ValueError,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
