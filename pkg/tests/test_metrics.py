import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tweetnorm.cleaner import TABLE3_GRID
from tweetnorm.metrics import (
    ConfusionMatrix,
    EmptyInput,
    LengthMismatch,
    MetricsRow,
    confusion,
    confusion_tsv,
    macro_scores,
    per_class_scores,
    render_confusion_text,
    render_records,
    render_table,
    scores,
)


class TestConfusion:
    def test_one_of_each_cell(self):
        cm = confusion([0.9, 0.4, 0.6, 0.2], [1, 1, 0, 0])
        assert (cm.tp, cm.fn, cm.fp, cm.tn) == (1, 1, 1, 1)

    def test_threshold_is_inclusive(self):
        cm = confusion([0.5], [0])
        assert cm.fp == 1 and cm.total == 1

    def test_custom_threshold(self):
        cm = confusion([0.6, 0.6], [1, 0], threshold=0.7)
        assert (cm.tp, cm.fn, cm.fp, cm.tn) == (0, 1, 0, 1)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            confusion([0.5], [1, 0])

    def test_empty(self):
        with pytest.raises(EmptyInput):
            confusion([], [])

    def test_bad_label(self):
        with pytest.raises(ValueError):
            confusion([0.5], [2])

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            ConfusionMatrix(tp=-1, fp=0, fn=0, tn=0)

    def test_swap_is_involution(self):
        cm = ConfusionMatrix(tp=3, fp=1, fn=2, tn=4)
        assert cm.swapped().swapped() == cm

    @given(
        st.lists(st.tuples(st.floats(0, 1), st.integers(0, 1)), min_size=1, max_size=60),
        st.floats(0.05, 0.95),
        st.floats(0.05, 0.95),
    )
    @settings(max_examples=60)
    def test_raising_threshold_shrinks_predicted_positives(self, pairs, t1, t2):
        lo, hi = sorted((t1, t2))
        preds = [p for p, _ in pairs]
        labels = [y for _, y in pairs]
        at_lo = confusion(preds, labels, threshold=lo)
        at_hi = confusion(preds, labels, threshold=hi)
        assert at_hi.tp + at_hi.fp <= at_lo.tp + at_lo.fp
        assert at_lo.total == at_hi.total == len(pairs)


class TestScores:
    def test_hand_case(self):
        row = scores(ConfusionMatrix(tp=3, fp=1, fn=2, tn=4), "x")
        assert row.accuracy == pytest.approx(0.7)
        assert row.precision == pytest.approx(0.75)
        assert row.recall == pytest.approx(0.6)
        assert row.undefined == ()

    def test_perfect(self):
        row = scores(confusion([0.9, 0.1], [1, 0]))
        assert (row.accuracy, row.precision, row.recall) == (1.0, 1.0, 1.0)

    def test_no_predicted_positives_flags_precision(self):
        row = scores(ConfusionMatrix(tp=0, fp=0, fn=2, tn=3))
        assert row.precision == 0.0
        assert row.undefined == ("precision",)

    def test_no_actual_positives_flags_recall(self):
        row = scores(ConfusionMatrix(tp=0, fp=1, fn=0, tn=3))
        assert row.recall == 0.0
        assert row.undefined == ("recall",)

    def test_empty_matrix(self):
        with pytest.raises(EmptyInput):
            scores(ConfusionMatrix(tp=0, fp=0, fn=0, tn=0))

    def test_swapped_scores_the_other_class(self):
        cm = ConfusionMatrix(tp=3, fp=1, fn=2, tn=4)
        male = scores(cm.swapped())
        assert male.precision == pytest.approx(4 / 6)
        assert male.recall == pytest.approx(4 / 5)
        assert male.accuracy == pytest.approx(0.7)  # accuracy is class-free

    def test_macro_averages_both_classes(self):
        cm = ConfusionMatrix(tp=3, fp=1, fn=2, tn=4)
        row = macro_scores(cm, "m")
        assert row.precision == pytest.approx((0.75 + 4 / 6) / 2)
        assert row.recall == pytest.approx((0.6 + 4 / 5) / 2)
        assert row.accuracy == pytest.approx(0.7)

    def test_per_class_keys(self):
        out = per_class_scores(ConfusionMatrix(tp=3, fp=1, fn=2, tn=4), "c")
        assert set(out) == {"female", "male", "macro"}
        assert out["female"].config_name == "c"
        assert out["macro"].precision == pytest.approx(
            (out["female"].precision + out["male"].precision) / 2
        )


PUBLISHED = [
    MetricsRow("With mention+no emoji", 0.7764, 0.7841, 0.7728),
    MetricsRow("With mention+with emoji", 0.7807, 0.7571, 0.8370),
    MetricsRow("No mention+no emoji", 0.7813, 0.7600, 0.7904),
    MetricsRow("No mention+with emoji", 0.7901, 0.7663, 0.8001),
]


class TestRenderTable:
    def test_reference_grid_all_twelve_values(self):
        out = render_table(PUBLISHED)
        lines = out.splitlines()
        assert lines[0].split() == ["config", "accuracy", "precision", "recall"]
        expect = [
            ("With mention+no emoji", "0.7764", "0.7841", "0.7728"),
            ("With mention+with emoji", "0.7807", "0.7571", "0.8370"),
            ("No mention+no emoji", "0.7813", "0.7600", "0.7904"),
            ("No mention+with emoji", "0.7901", "0.7663", "0.8001"),
        ]
        for line, (name, *vals) in zip(lines[1:], expect):
            assert line.startswith(name)
            assert line.split()[-3:] == vals

    def test_row_order_matches_grid_label_order(self):
        assert [r.config_name for r in PUBLISHED] == [c.label for c in TABLE3_GRID]

    def test_four_decimal_places(self):
        out = render_table([MetricsRow("x", 1 / 3, 2 / 3, 0.5)])
        assert "0.3333" in out and "0.6667" in out and "0.5000" in out

    def test_perfect_row_renders_one_three_times(self):
        out = render_table([MetricsRow("p", 1.0, 1.0, 1.0)])
        assert out.count("1.0000") == 3

    def test_flagged_metric_gets_star_and_footnote(self):
        row = scores(ConfusionMatrix(tp=0, fp=0, fn=2, tn=3), "deg")
        out = render_table([row])
        assert "0.0000*" in out
        assert "denominator was zero" in out

    def test_unflagged_table_has_no_footnote(self):
        out = render_table(PUBLISHED)
        assert "*" not in out

    def test_empty_rejected(self):
        with pytest.raises(EmptyInput):
            render_table([])


class TestRenderRecords:
    def test_exact_lines(self):
        cm = ConfusionMatrix(tp=3, fp=1, fn=2, tn=4)
        row = scores(cm, "cfg")
        out = render_records([(row, cm)])
        lines = out.splitlines()
        assert lines[0] == "# config\taccuracy\tprecision\trecall\ttp\tfp\tfn\ttn"
        assert lines[1] == "cfg\t0.7\t0.75\t0.6\t3\t1\t2\t4"

    def test_floats_round_trip(self):
        cm = ConfusionMatrix(tp=1, fp=2, fn=0, tn=4)
        row = scores(cm, "c")
        line = render_records([(row, cm)]).splitlines()[1]
        _, acc, prec, rec, *_ = line.split("\t")
        assert float(acc) == row.accuracy
        assert float(prec) == row.precision
        assert float(rec) == row.recall


class TestConfusionRenders:
    def test_text_layout(self):
        out = render_confusion_text(ConfusionMatrix(tp=3, fp=1, fn=2, tn=4))
        lines = out.splitlines()
        assert lines[0].split() == ["actual", "pred_female", "pred_male"]
        assert lines[1].split() == ["female", "3", "2"]
        assert lines[2].split() == ["male", "1", "4"]

    def test_tsv_layout(self):
        out = confusion_tsv(ConfusionMatrix(tp=3, fp=1, fn=2, tn=4))
        assert out == "# actual\tpred_female\tpred_male\nfemale\t3\t2\nmale\t1\t4\n"
