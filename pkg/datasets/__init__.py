"""
Unit samples and CSV ingestion.
"""

from datasets.csv_loader import ingest_csv
from datasets.unit_sample import UnitSample, as_values, minmax_transform, squeeze_boundary, to_unit_sample

__all__ = ["UnitSample", "as_values", "ingest_csv", "minmax_transform", "squeeze_boundary", "to_unit_sample"]
