"""
Tests for CSV ingestion and unit-interval standardization.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from datasets.csv_loader import ingest_csv
from datasets.unit_sample import UnitSample, minmax_transform, squeeze_boundary, to_unit_sample
from errors import DataIngestionError, DegenerateRangeError, DomainError


class TestIngestCsv:
    def test_headerless_first_column(self, write_csv):
        path = write_csv("0.1\n0.2\n\n0.3\n")
        np.testing.assert_array_equal(ingest_csv(path), [0.1, 0.2, 0.3])

    def test_header_by_name_and_index(self, write_csv):
        path = write_csv("month,rate\n1,0.25\n2,0.5\n")
        np.testing.assert_array_equal(ingest_csv(path, "rate"), [0.25, 0.5])
        np.testing.assert_array_equal(ingest_csv(path, "1"), [0.25, 0.5])
        np.testing.assert_array_equal(ingest_csv(path, 0), [1.0, 2.0])

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataIngestionError, match="not found"):
            ingest_csv(tmp_path / "absent.csv")

    def test_empty_file(self, write_csv):
        with pytest.raises(DataIngestionError, match="empty"):
            ingest_csv(write_csv(""))

    def test_missing_column(self, write_csv):
        with pytest.raises(DataIngestionError, match="humidity"):
            ingest_csv(write_csv("rate\n0.5\n"), "humidity")

    def test_non_numeric_names_line(self, write_csv):
        with pytest.raises(DataIngestionError, match="line 3"):
            ingest_csv(write_csv("rate\n0.5\nabc\n"), "rate")

    def test_empty_cell_names_line(self, write_csv):
        with pytest.raises(DataIngestionError, match="line 2"):
            ingest_csv(write_csv("a,b\n1,\n2,3\n"), "b")

    def test_ingestion_error_exit_code(self):
        assert DataIngestionError("x").exit_code == 2


class TestMinMax:
    def test_maps_extremes(self):
        sample = minmax_transform([10.0, 20.0, 15.0], squeeze=False)
        np.testing.assert_allclose(sample.values, [0.0, 1.0, 0.5])
        assert not sample.squeezed

    def test_squeeze(self):
        sample = minmax_transform([10.0, 20.0, 15.0], squeeze=True)
        np.testing.assert_allclose(sample.values, [0.5 / 3.0, 2.5 / 3.0, 1.5 / 3.0])
        assert sample.squeezed
        assert np.all((sample.values > 0.0) & (sample.values < 1.0))

    def test_preserves_order_and_ranks(self):
        raw = np.array([3.0, -1.0, 7.5, 2.0])
        sample = minmax_transform(raw, squeeze=True)
        np.testing.assert_array_equal(np.argsort(sample.values), np.argsort(raw))

    @pytest.mark.parametrize("values", [[4.0, 4.0, 4.0], [1.0], []])
    def test_degenerate_range(self, values):
        with pytest.raises(DegenerateRangeError):
            minmax_transform(values, squeeze=False)


class TestUnitSample:
    def test_closed_interval_accepted(self):
        sample = UnitSample(values=[0.0, 0.5, 1.0])
        assert sample.n == 3
        assert sample.has_zero and sample.has_one

    def test_outside_rejected(self):
        with pytest.raises(ValidationError):
            UnitSample(values=[0.5, 1.2])

    def test_to_unit_sample_names_index(self):
        with pytest.raises(DomainError, match="index 2.*--minmax"):
            to_unit_sample([0.1, 0.2, -0.3])

    def test_squeeze_boundary(self):
        squeezed = squeeze_boundary(UnitSample(values=[0.0, 1.0]))
        np.testing.assert_allclose(squeezed.values, [0.25, 0.75])
        assert squeezed.squeezed
        inside = UnitSample(values=[0.2, 0.4])
        assert squeeze_boundary(inside) is inside
