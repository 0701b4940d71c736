"""Shared fixtures: a tiny local encoder + tokenizer, and planted corpora.

The tests never download weights. A small randomly initialized encoder with
a word-level tokenizer is built on the fly and saved to disk, which
exercises exactly the same load/tokenize/train/predict path as a published
checkpoint directory would.
"""

import random

import pytest

NEUTRAL = (
    "the and for with just really today tomorrow morning night coffee lunch "
    "game show travel city studio practice weekend monday friday home road "
    "team crew fans friends music song match score photo video live work"
).split()
FEMALE_SIGNAL = ["velvet", "blossom", "rosegold", "shimmer", "tiara"]
MALE_SIGNAL = ["gridiron", "quarterback", "barbell", "octane", "torque"]


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    import torch
    from tokenizers import Tokenizer, models, normalizers, pre_tokenizers, processors
    from transformers import BertConfig, BertModel, PreTrainedTokenizerFast

    out = tmp_path_factory.mktemp("tiny_encoder")
    vocab = {"[PAD]": 0, "[UNK]": 1, "[CLS]": 2, "[SEP]": 3}
    for word in NEUTRAL + FEMALE_SIGNAL + MALE_SIGNAL:
        vocab[word] = len(vocab)

    tok = Tokenizer(models.WordLevel(vocab=vocab, unk_token="[UNK]"))
    tok.normalizer = normalizers.Lowercase()
    tok.pre_tokenizer = pre_tokenizers.Whitespace()
    tok.post_processor = processors.TemplateProcessing(
        single="[CLS] $A [SEP]",
        pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", vocab["[CLS]"]), ("[SEP]", vocab["[SEP]"])],
    )
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tok,
        unk_token="[UNK]",
        pad_token="[PAD]",
        cls_token="[CLS]",
        sep_token="[SEP]",
    )
    fast.save_pretrained(out)

    torch.manual_seed(1234)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=64,
    )
    BertModel(config).save_pretrained(out)
    return str(out)


def planted_rows(n, seed, signal_rate=0.9):
    """Balanced rows whose label correlates only with one planted word."""
    rng = random.Random(seed)
    rows = []
    for i in range(n):
        female = i % 2 == 0
        words = rng.choices(NEUTRAL, k=rng.randint(5, 9))
        if rng.random() < signal_rate:
            words.append(rng.choice(FEMALE_SIGNAL if female else MALE_SIGNAL))
        rng.shuffle(words)
        rows.append((f"t{i:06d}", 1 if female else 0, " ".join(words)))
    return rows


def write_rows(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# id\tlabel\ttext\n")
        for rid, y, text in rows:
            fh.write(f"{rid}\t{y}\t{text}\n")


@pytest.fixture()
def smoke_files(tmp_path):
    """40 train / 10 val rows."""
    rows = planted_rows(50, seed=7)
    train, val = tmp_path / "train.tsv", tmp_path / "val.tsv"
    write_rows(train, rows[:40])
    write_rows(val, rows[40:])
    return str(train), str(val), rows[40:]
