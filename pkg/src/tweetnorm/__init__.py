"""Tweet normalization and gender-polarity ablation toolkit.

Pipeline: bytes-literal parsing and UTF-8 repair, emoji/emoticon
substitution, mention and retweet handling, seeded splits with balance
checks, a hashed n-gram logistic baseline, Table-style metrics, emotion
cross-tabs, and an ablation runner that ties it together behind a CLI.
"""

from .bytes_literal import (
    DecodedText,
    MalformedLiteral,
    decode_utf8,
    parse_bytes_literal,
    render_bytes_literal,
)
from .cleaner import (
    TABLE3_GRID,
    NormalizationConfig,
    NormalizedTweet,
    is_retweet,
    normalize,
    normalize_many,
    strip_mentions,
)
from .classifier import (
    Hyperparams,
    Model,
    SingleClassCorpus,
    featurize,
    label_of,
    load_model,
    loss_and_gradient,
    predict,
    predict_many,
    save_model,
    train,
)
from .dataset import (
    Account,
    BalanceViolation,
    Corpus,
    DistributionSummary,
    EmptyCorpus,
    RawRecord,
    Split,
    check_balance,
    load_corpus,
    load_split,
    save_split,
    shuffle_split,
    shuffle_split_ids,
    summarize,
)
from .emoji import (
    EmojiTable,
    EmoticonLexicon,
    canonical_whitespace,
    load_emoji_table,
    load_emoticon_lexicon,
    replace_emojis,
    replace_emoticons,
    strip_emojis,
    strip_emoticons,
)
from .emotion import EmotionScores, emotion_gender_report, load_emotion_lexicon, tag
from .metrics import ConfusionMatrix, MetricsRow, confusion, render_table, scores
from .runner import (
    BalanceRetriesExhausted,
    ExperimentResult,
    ExperimentSpec,
    generate_synthetic_corpus,
    read_interchange,
    read_predictions,
    run_grid,
    write_corpus,
    write_interchange,
    write_predictions,
    write_report_bundle,
)

__version__ = "0.1.0"
