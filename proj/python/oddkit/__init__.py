"""Outlier-detection toolkit: classical detectors behind one contract,
score combination, synthetic data and evaluation utilities."""

from ._oddkit import (
    Detector,
    algo_names,
    combine_aom,
    combine_average,
    combine_max,
    combine_moa,
    evaluate_format,
    generate_data,
    labels_from_scores,
    load_model,
    precision_at_n,
    roc_auc,
    threshold_from_scores,
    zscore_standardize,
)

__all__ = [
    "Detector",
    "algo_names",
    "combine_aom",
    "combine_average",
    "combine_max",
    "combine_moa",
    "evaluate_format",
    "generate_data",
    "labels_from_scores",
    "load_model",
    "precision_at_n",
    "roc_auc",
    "threshold_from_scores",
    "zscore_standardize",
]

__version__ = "0.1.0"
