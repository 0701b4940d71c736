"""Transformer fine-tuning against the tweetnorm file contract.

Couples to the main toolkit through files only: reads its
`id<TAB>label<TAB>text` interchange rows, writes its
`id<TAB>probability_female` predictions rows plus a manifest.json
recording everything needed to rerun. No tweetnorm import anywhere, so
this package can live on a training box that never installs it.

The model is a pretrained uncased base encoder with a dropout + single
logit head trained with BCE; probability of female = sigmoid(logit).
Defaults follow the usual fine-tuning recipe for this setup: lr 2e-5,
dropout 0.1, 10 epochs.
"""

from __future__ import annotations

import dataclasses
import json
import os
import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch
from torch import nn

# forward/backward on CPU is deterministic for this graph; reruns with the
# same files, config, and seed agree to this tolerance (see manifest)
PROB_TOLERANCE = 1e-6


class AdapterError(RuntimeError):
    pass


@dataclass(frozen=True)
class AdapterConfig:
    model_name: str = "bert-base-uncased"
    lr: float = 2e-5
    epochs: int = 10
    dropout: float = 0.1
    max_sequence_length: int = 64
    seed: int = 0
    device: str = "cpu"
    batch_size: int = 16

    def __post_init__(self):
        if self.lr <= 0:
            raise ValueError(f"lr must be positive, got {self.lr}")
        if not 0 <= self.dropout < 1:
            raise ValueError(f"dropout must be in [0, 1), got {self.dropout}")
        if self.epochs < 0:
            raise ValueError(f"epochs must be >= 0, got {self.epochs}")
        if self.max_sequence_length < 2 or self.batch_size < 1:
            raise ValueError("max_sequence_length >= 2 and batch_size >= 1 required")


def read_interchange(path) -> list:
    """`id<TAB>label<TAB>text` rows, label 1 = female. Comments start with #."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t", 2)
            if len(parts) != 3 or parts[1] not in ("0", "1"):
                raise AdapterError(f"{path}:{lineno}: expected `id<TAB>0|1<TAB>text`")
            rows.append((parts[0], int(parts[1]), parts[2]))
    return rows


def write_predictions(path, pairs) -> None:
    """Atomic write of `id<TAB>probability_female` rows (temp then rename)."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# id\tprobability_female\n")
        for rid, p in pairs:
            fh.write(f"{rid}\t{p!r}\n")
    os.replace(tmp, path)


class GenderHead(nn.Module):
    """Encoder -> pooled sentence vector -> dropout -> one logit."""

    def __init__(self, encoder, dropout: float):
        super().__init__()
        self.encoder = encoder
        self.dropout = nn.Dropout(dropout)
        self.classifier = nn.Linear(encoder.config.hidden_size, 1)

    def forward(self, input_ids, attention_mask):
        out = self.encoder(input_ids=input_ids, attention_mask=attention_mask)
        pooled = getattr(out, "pooler_output", None)
        if pooled is None:
            # mask-weighted mean over tokens for encoders without a pooler
            hidden = out.last_hidden_state
            mask = attention_mask.unsqueeze(-1).to(hidden.dtype)
            pooled = (hidden * mask).sum(1) / mask.sum(1).clamp(min=1)
        return self.classifier(self.dropout(pooled)).squeeze(-1)


def _seed_everything(seed: int):
    random.seed(seed)
    np.random.seed(seed)
    torch.manual_seed(seed)


def _load_pretrained(config: AdapterConfig):
    from transformers import AutoModel, AutoTokenizer

    try:
        tokenizer = AutoTokenizer.from_pretrained(config.model_name)
        encoder = AutoModel.from_pretrained(config.model_name)
    except Exception as exc:
        raise AdapterError(
            f"could not load pretrained weights for {config.model_name!r}"
            f" (is the model downloaded / the path correct?): {exc}"
        ) from exc
    return tokenizer, encoder


def _encode(tokenizer, texts, config):
    batch = tokenizer(
        texts,
        padding=True,
        truncation=True,
        max_length=config.max_sequence_length,
        return_tensors="pt",
    )
    return batch["input_ids"], batch["attention_mask"]


def fine_tune_and_predict(train_file, val_file, out_path, config: AdapterConfig) -> Path:
    """Train on train_file, write per-id probabilities for val_file rows.

    Predictions keep the val file's row order. A manifest.json lands next to
    the predictions file; both are written atomically so a failed run leaves
    no partial output.
    """
    train_rows = read_interchange(train_file)
    val_rows = read_interchange(val_file)
    if not train_rows or not val_rows:
        raise AdapterError("train and val files must be nonempty")
    labels = {y for _, y, _ in train_rows}
    if labels != {0, 1}:
        raise AdapterError(f"train file needs both labels, got {sorted(labels)}")

    _seed_everything(config.seed)
    tokenizer, encoder = _load_pretrained(config)
    device = torch.device(config.device)
    model = GenderHead(encoder, config.dropout).to(device)
    optimizer = torch.optim.AdamW(model.parameters(), lr=config.lr)
    loss_fn = nn.BCEWithLogitsLoss()

    ids = torch.tensor([float(y) for _, y, _ in train_rows])
    texts = [text for _, _, text in train_rows]
    order_rng = torch.Generator().manual_seed(config.seed)

    model.train()
    for _ in range(config.epochs):
        perm = torch.randperm(len(texts), generator=order_rng)
        for start in range(0, len(texts), config.batch_size):
            idx = perm[start : start + config.batch_size]
            input_ids, attention_mask = _encode(tokenizer, [texts[i] for i in idx], config)
            logits = model(input_ids.to(device), attention_mask.to(device))
            loss = loss_fn(logits, ids[idx].to(device))
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()

    model.eval()
    probs = []
    with torch.no_grad():
        for start in range(0, len(val_rows), config.batch_size):
            chunk = val_rows[start : start + config.batch_size]
            input_ids, attention_mask = _encode(tokenizer, [t for _, _, t in chunk], config)
            logits = model(input_ids.to(device), attention_mask.to(device))
            probs.extend(torch.sigmoid(logits).cpu().numpy().tolist())
    # keep probabilities inside the open interval so downstream log math is safe
    eps = float(np.nextafter(0.0, 1.0))
    pairs = [(rid, min(max(p, eps), 1.0 - 1e-16)) for (rid, _, _), p in zip(val_rows, probs)]

    out_path = Path(out_path)
    write_predictions(out_path, pairs)
    manifest = {
        "config": dataclasses.asdict(config),
        "n_train": len(train_rows),
        "n_val": len(val_rows),
        "prob_tolerance": PROB_TOLERANCE,
        "torch_version": torch.__version__,
        "transformers_version": _transformers_version(),
        "predictions_file": out_path.name,
    }
    manifest_path = out_path.with_name("manifest.json")
    tmp = manifest_path.with_name(manifest_path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, manifest_path)
    return out_path


def _transformers_version() -> str:
    import transformers

    return transformers.__version__
