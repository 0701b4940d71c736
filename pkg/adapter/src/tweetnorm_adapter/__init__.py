from .adapter import (
    PROB_TOLERANCE,
    AdapterConfig,
    AdapterError,
    fine_tune_and_predict,
    read_interchange,
    write_predictions,
)

__version__ = "0.1.0"

__all__ = [
    "PROB_TOLERANCE",
    "AdapterConfig",
    "AdapterError",
    "fine_tune_and_predict",
    "read_interchange",
    "write_predictions",
    "__version__",
]
