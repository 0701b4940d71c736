import argparse
import sys

from .adapter import AdapterConfig, AdapterError, fine_tune_and_predict


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetnorm-adapter",
        description="fine-tune a pretrained transformer on interchange rows and write predictions",
    )
    parser.add_argument("--train-file", required=True, help="id<TAB>label<TAB>text rows")
    parser.add_argument("--val-file", required=True)
    parser.add_argument("--out", required=True, help="predictions path; manifest.json lands beside it")
    parser.add_argument("--model-name", default="bert-base-uncased")
    parser.add_argument("--lr", type=float, default=2e-5)
    parser.add_argument("--epochs", type=int, default=10)
    parser.add_argument("--dropout", type=float, default=0.1)
    parser.add_argument("--max-seq-len", type=int, default=64)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--device", default="cpu")
    parser.add_argument("--batch-size", type=int, default=16)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = AdapterConfig(
        model_name=args.model_name,
        lr=args.lr,
        epochs=args.epochs,
        dropout=args.dropout,
        max_sequence_length=args.max_seq_len,
        seed=args.seed,
        device=args.device,
        batch_size=args.batch_size,
    )
    try:
        out = fine_tune_and_predict(args.train_file, args.val_file, args.out, config)
    except (AdapterError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"predictions -> {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
