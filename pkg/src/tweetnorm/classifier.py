"""Hashed n-gram logistic classifier used as the grid's trainable head.

Featurization is the hashing trick: word n-grams over whitespace tokens and
character n-grams inside tokens, each hashed with blake2b (8-byte digest,
read big-endian). The bucket is the hash mod dims and the sign comes from
bit 63; dims is a power of two, so bucket and sign use disjoint bits.

Training is plain per-example SGD on binary cross-entropy with an l2 term,
with feature dropout (occupied buckets zeroed, no rescaling) during training
only. All randomness (epoch order, dropout masks) comes from one PCG64
generator seeded with hp.seed, so a run is reproducible bit for bit.

Label convention throughout: 1 = female, 0 = male.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

LABELS = {"female": 1, "male": 0}

MODEL_FORMAT = "hashed-logit-v1"


class SingleClassCorpus(ValueError):
    """Training set contains only one label; nothing to separate."""


def label_of(gender: str) -> int:
    try:
        return LABELS[gender]
    except KeyError:
        raise ValueError(f"unknown gender {gender!r}, expected one of {sorted(LABELS)}") from None


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _check_range(name, rng):
    if rng is None:
        return
    lo, hi = rng
    if not (1 <= lo <= hi):
        raise ValueError(f"{name} must satisfy 1 <= lo <= hi, got {rng}")


@dataclass(frozen=True)
class Hyperparams:
    dims: int = 2**18
    word_ngrams: Optional[tuple] = (1, 2)
    char_ngrams: Optional[tuple] = (3, 5)
    lr: float = 0.1
    epochs: int = 10
    l2: float = 1e-6
    dropout: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.dims < 2 or not _is_power_of_two(self.dims):
            raise ValueError(f"dims must be a power of two >= 2, got {self.dims}")
        if self.lr <= 0:
            raise ValueError(f"lr must be positive, got {self.lr}")
        if self.epochs < 0:
            raise ValueError(f"epochs must be >= 0, got {self.epochs}")
        if not 0 <= self.dropout < 1:
            raise ValueError(f"dropout must be in [0, 1), got {self.dropout}")
        _check_range("word_ngrams", self.word_ngrams)
        _check_range("char_ngrams", self.char_ngrams)
        if self.word_ngrams is not None:
            object.__setattr__(self, "word_ngrams", tuple(self.word_ngrams))
        if self.char_ngrams is not None:
            object.__setattr__(self, "char_ngrams", tuple(self.char_ngrams))


@dataclass(frozen=True)
class SparseVector:
    indices: np.ndarray  # sorted unique int64 in [0, dims)
    values: np.ndarray  # float64, same length
    dims: int

    def as_dict(self) -> dict[int, float]:
        return {int(i): float(v) for i, v in zip(self.indices, self.values)}


@dataclass
class Model:
    weights: np.ndarray
    bias: float
    hyperparams: Hyperparams


def zero_model(hp: Hyperparams) -> Model:
    return Model(weights=np.zeros(hp.dims), bias=0.0, hyperparams=hp)


def _hash_gram(gram: str) -> int:
    d = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(d, "big")


def _grams(text: str, hp: Hyperparams):
    tokens = text.split()
    if hp.word_ngrams is not None:
        lo, hi = hp.word_ngrams
        for n in range(lo, hi + 1):
            for i in range(len(tokens) - n + 1):
                yield f"w{n}|" + " ".join(tokens[i : i + n])
    if hp.char_ngrams is not None:
        lo, hi = hp.char_ngrams
        for tok in tokens:
            for n in range(lo, hi + 1):
                for i in range(len(tok) - n + 1):
                    yield f"c{n}|" + tok[i : i + n]


def featurize(text: str, hp: Hyperparams) -> SparseVector:
    """Signed hashed n-gram counts. Pure, deterministic for fixed hp."""
    mask = hp.dims - 1
    acc: dict[int, float] = {}
    for gram in _grams(text, hp):
        h = _hash_gram(gram)
        bucket = h & mask
        sign = -1.0 if h >> 63 else 1.0
        acc[bucket] = acc.get(bucket, 0.0) + sign
    if not acc:
        return SparseVector(
            indices=np.empty(0, dtype=np.int64), values=np.empty(0), dims=hp.dims
        )
    indices = np.array(sorted(acc), dtype=np.int64)
    values = np.array([acc[int(i)] for i in indices])
    return SparseVector(indices=indices, values=values, dims=hp.dims)


def _sigmoid(z: float) -> float:
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    ez = math.exp(z)
    return ez / (1.0 + ez)


def loss_and_gradient(model: Model, batch: Sequence[tuple[SparseVector, int]]):
    """Mean BCE + (l2/2)*||w||^2 over the batch, with its exact gradient.

    The BCE term is computed as logaddexp(0, z) - y*z, which is the same
    quantity as -(y log p + (1-y) log(1-p)) but never evaluates log(0).
    Returns (loss, dense weight gradient, bias gradient). This is the
    reference form the finite-difference tests check; train() applies the
    per-example special case of the same gradient.
    """
    if not batch:
        raise ValueError("batch must be nonempty")
    w = model.weights
    hp = model.hyperparams
    n = len(batch)
    loss = 0.0
    grad_w = np.zeros_like(w)
    grad_b = 0.0
    for x, y in batch:
        z = float(w[x.indices] @ x.values) + model.bias
        loss += float(np.logaddexp(0.0, z)) - y * z
        coef = (_sigmoid(z) - y) / n
        grad_w[x.indices] += coef * x.values
        grad_b += coef
    loss = loss / n + 0.5 * hp.l2 * float(w @ w)
    grad_w += hp.l2 * w
    return loss, grad_w, grad_b


def train(pairs: Sequence[tuple[str, int]], hp: Hyperparams) -> Model:
    """Per-example SGD over (text, label) pairs for hp.epochs passes.

    Each epoch draws a fresh example order from the generator, then for every
    example independently drops each occupied feature with probability
    hp.dropout (training only) before the update. The l2 step is applied to
    the touched coordinates only, the usual sparse-SGD shortcut; the exact
    dense penalty lives in loss_and_gradient for checking.
    """
    labels = {y for _, y in pairs}
    if labels - {0, 1}:
        raise ValueError(f"labels must be 0/1, got {sorted(labels)}")
    if len(labels) < 2:
        raise SingleClassCorpus(f"training set has labels {sorted(labels)}, need both classes")

    feats = [featurize(text, hp) for text, _ in pairs]
    ys = [y for _, y in pairs]
    w = np.zeros(hp.dims)
    b = 0.0
    lr, l2, dropout = hp.lr, hp.l2, hp.dropout
    rng = np.random.Generator(np.random.PCG64(hp.seed))
    for _ in range(hp.epochs):
        order = rng.permutation(len(feats))
        for k in order:
            x = feats[k]
            idx, vals = x.indices, x.values
            if dropout > 0.0 and len(idx):
                keep = rng.random(len(idx)) >= dropout
                idx, vals = idx[keep], vals[keep]
            z = float(w[idx] @ vals) + b
            g = _sigmoid(z) - ys[k]
            if len(idx):
                w[idx] -= lr * (g * vals + l2 * w[idx])
            b -= lr * g
    return Model(weights=w, bias=b, hyperparams=hp)


def decision(model: Model, x: SparseVector) -> float:
    return float(model.weights[x.indices] @ x.values) + model.bias


# smallest representable step inside (0, 1); predict never returns the
# endpoints so downstream log-loss style math stays finite
_P_LO = np.nextafter(0.0, 1.0)
_P_HI = np.nextafter(1.0, 0.0)


def predict(model: Model, text: str) -> float:
    """P(label=1) for one text; dropout is inference-off by construction."""
    p = _sigmoid(decision(model, featurize(text, model.hyperparams)))
    return min(max(p, _P_LO), _P_HI)


def predict_many(model: Model, texts: Sequence[str]) -> np.ndarray:
    return np.array([predict(model, t) for t in texts])


def save_model(model: Model, path) -> None:
    """JSON dump of hyperparams, bias, and the nonzero weights.

    Floats go through repr (shortest round-trip form), so load_model
    reconstructs bit-identical values.
    """
    nz = np.nonzero(model.weights)[0]
    hp = model.hyperparams
    doc = {
        "format": MODEL_FORMAT,
        "hyperparams": {
            "dims": hp.dims,
            "word_ngrams": list(hp.word_ngrams) if hp.word_ngrams else None,
            "char_ngrams": list(hp.char_ngrams) if hp.char_ngrams else None,
            "lr": hp.lr,
            "epochs": hp.epochs,
            "l2": hp.l2,
            "dropout": hp.dropout,
            "seed": hp.seed,
        },
        "bias": model.bias,
        "indices": [int(i) for i in nz],
        "values": [float(v) for v in model.weights[nz]],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_model(path) -> Model:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("format") != MODEL_FORMAT:
        raise ValueError(f"unsupported model format {doc.get('format')!r}")
    hdoc = doc["hyperparams"]
    hp = Hyperparams(
        dims=hdoc["dims"],
        word_ngrams=tuple(hdoc["word_ngrams"]) if hdoc["word_ngrams"] else None,
        char_ngrams=tuple(hdoc["char_ngrams"]) if hdoc["char_ngrams"] else None,
        lr=hdoc["lr"],
        epochs=hdoc["epochs"],
        l2=hdoc["l2"],
        dropout=hdoc["dropout"],
        seed=hdoc["seed"],
    )
    w = np.zeros(hp.dims)
    if doc["indices"]:
        w[np.array(doc["indices"], dtype=np.int64)] = np.array(doc["values"])
    return Model(weights=w, bias=float(doc["bias"]), hyperparams=hp)
