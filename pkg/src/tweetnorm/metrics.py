"""Confusion matrices and accuracy/precision/recall tables.

Positive class is female (label 1) everywhere; a probability counts as a
positive prediction when p >= threshold, boundary inclusive, because an
untrained model emits exactly 0.5 and the decision has to be defined there.
A zero denominator makes the affected metric 0 and flags it instead of
raising, so a whole grid of configs always renders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

DEFAULT_THRESHOLD = 0.5


class LengthMismatch(ValueError):
    pass


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("confusion counts must be nonnegative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def swapped(self) -> "ConfusionMatrix":
        """The same predictions scored with male as the positive class."""
        return ConfusionMatrix(tp=self.tn, fp=self.fn, fn=self.fp, tn=self.tp)


@dataclass(frozen=True)
class MetricsRow:
    config_name: str
    accuracy: float
    precision: float
    recall: float
    # names of metrics whose denominator was zero (reported as 0 by rule)
    undefined: tuple = ()


def confusion(
    preds: Sequence[float], labels: Sequence[int], threshold: float = DEFAULT_THRESHOLD
) -> ConfusionMatrix:
    if len(preds) != len(labels):
        raise LengthMismatch(f"{len(preds)} predictions vs {len(labels)} labels")
    if len(preds) == 0:
        raise EmptyInput("nothing to score")
    tp = fp = fn = tn = 0
    for p, y in zip(preds, labels):
        if y not in (0, 1):
            raise ValueError(f"labels must be 0/1, got {y!r}")
        if p >= threshold:
            if y == 1:
                tp += 1
            else:
                fp += 1
        else:
            if y == 1:
                fn += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def _ratio(num: int, den: int, name: str, flags: list) -> float:
    if den == 0:
        flags.append(name)
        return 0.0
    return num / den


def scores(cm: ConfusionMatrix, config_name: str = "") -> MetricsRow:
    if cm.total == 0:
        raise EmptyInput("confusion matrix is empty")
    flags: list = []
    precision = _ratio(cm.tp, cm.tp + cm.fp, "precision", flags)
    recall = _ratio(cm.tp, cm.tp + cm.fn, "recall", flags)
    return MetricsRow(
        config_name=config_name,
        accuracy=(cm.tp + cm.tn) / cm.total,
        precision=precision,
        recall=recall,
        undefined=tuple(flags),
    )


def macro_scores(cm: ConfusionMatrix, config_name: str = "") -> MetricsRow:
    """Precision/recall averaged over both classes; accuracy is class-free."""
    f = scores(cm, config_name)
    m = scores(cm.swapped(), config_name)
    flags = tuple(sorted(set(f.undefined) | set(m.undefined)))
    return MetricsRow(
        config_name=config_name,
        accuracy=f.accuracy,
        precision=(f.precision + m.precision) / 2,
        recall=(f.recall + m.recall) / 2,
        undefined=flags,
    )


def per_class_scores(cm: ConfusionMatrix, config_name: str = "") -> dict:
    """All three readings of precision/recall: female, male, macro.

    The published numbers never say which class they score, so emitting all
    three lets any of them be compared directly.
    """
    return {
        "female": scores(cm, config_name),
        "male": scores(cm.swapped(), config_name),
        "macro": macro_scores(cm, config_name),
    }


def render_table(rows: Sequence[MetricsRow]) -> str:
    """Fixed-width text table, 4 decimal places, rows in the given order.

    Metrics zeroed by the degenerate-denominator rule are marked with `*`
    and explained in a footnote.
    """
    if not rows:
        raise EmptyInput("no rows to render")
    name_w = max(len("config"), max(len(r.config_name) for r in rows))

    def cell(value: float, flagged: bool) -> str:
        return f"{value:.4f}" + ("*" if flagged else " ")

    lines = [f"{'config':<{name_w}}  {'accuracy':>9}  {'precision':>10}  {'recall':>7}"]
    any_flag = False
    for r in rows:
        pf = "precision" in r.undefined
        rf = "recall" in r.undefined
        any_flag = any_flag or pf or rf
        lines.append(
            f"{r.config_name:<{name_w}}  {cell(r.accuracy, False):>9}"
            f"  {cell(r.precision, pf):>10}  {cell(r.recall, rf):>7}"
        )
    if any_flag:
        lines.append("* denominator was zero; metric reported as 0 by convention")
    return "\n".join(lines) + "\n"


def render_records(items: Sequence[tuple[MetricsRow, ConfusionMatrix]]) -> str:
    """Machine-readable TSV, one record per config."""
    lines = ["# config\taccuracy\tprecision\trecall\ttp\tfp\tfn\ttn"]
    for row, cm in items:
        lines.append(
            f"{row.config_name}\t{row.accuracy!r}\t{row.precision!r}\t{row.recall!r}"
            f"\t{cm.tp}\t{cm.fp}\t{cm.fn}\t{cm.tn}"
        )
    return "\n".join(lines) + "\n"


def render_confusion_text(cm: ConfusionMatrix) -> str:
    w = max(len(str(v)) for v in (cm.tp, cm.fp, cm.fn, cm.tn))
    w = max(w, len("pred_female"))
    return (
        f"{'actual':<8}  {'pred_female':>{w}}  {'pred_male':>{w}}\n"
        f"{'female':<8}  {cm.tp:>{w}}  {cm.fn:>{w}}\n"
        f"{'male':<8}  {cm.fp:>{w}}  {cm.tn:>{w}}\n"
    )


def confusion_tsv(cm: ConfusionMatrix) -> str:
    """Delimited 2x2 for external plotting; rows actual, columns predicted."""
    return (
        "# actual\tpred_female\tpred_male\n"
        f"female\t{cm.tp}\t{cm.fn}\n"
        f"male\t{cm.fp}\t{cm.tn}\n"
    )
