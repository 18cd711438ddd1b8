from __future__ import annotations

import numpy as np
import pytest

from nmbplots.schema import SchemaError, occupancy_grid, read_csv


def write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestReadCsv:
    def test_valid_trace(self, tmp_path):
        path = write(tmp_path, "t,E\n0,5.77\n0.1,5.5\n")
        data = read_csv(path, "trace")
        assert data.shape == (2, 2)
        assert data[1, 1] == 5.5

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError, match="does not exist"):
            read_csv(tmp_path / "nope.csv", "trace")

    def test_empty_file(self, tmp_path):
        with pytest.raises(SchemaError, match="empty"):
            read_csv(write(tmp_path, ""), "trace")

    def test_header_only(self, tmp_path):
        with pytest.raises(SchemaError, match="no data rows"):
            read_csv(write(tmp_path, "t,E\n"), "trace")

    def test_wrong_column_named(self, tmp_path):
        with pytest.raises(SchemaError, match="'E'"):
            read_csv(write(tmp_path, "t,energy\n0,1\n"), "trace")
        with pytest.raises(SchemaError, match="'extra'"):
            read_csv(write(tmp_path, "t,E,extra\n0,1,2\n"), "trace")

    def test_non_numeric_cell_named(self, tmp_path):
        with pytest.raises(SchemaError, match="column 'nmbq'"):
            read_csv(write(tmp_path, "alpha,nmbq\n0.2,oops\n"), "sweep")

    def test_ragged_row(self, tmp_path):
        with pytest.raises(SchemaError, match="line 3"):
            read_csv(write(tmp_path, "t,F\n0,1\n0.1\n"), "fidelity")


class TestOccupancyGrid:
    def test_pivot(self, tmp_path):
        text = "t,omega,occupancy\n" + "".join(
            f"{t},{w},{t * w}\n" for t in (0.0, 1.0) for w in (0.5, 1.0, 1.5)
        )
        data = read_csv(write(tmp_path, text), "occupancy")
        times, freqs, values = occupancy_grid(data)
        assert times.tolist() == [0.0, 1.0]
        assert freqs.tolist() == [0.5, 1.0, 1.5]
        assert np.allclose(values, np.outer(times, freqs))

    def test_incomplete_grid(self, tmp_path):
        text = "t,omega,occupancy\n0,0.5,0\n0,1.0,0\n1,0.5,0\n"
        data = read_csv(write(tmp_path, text), "occupancy")
        with pytest.raises(SchemaError, match="complete"):
            occupancy_grid(data)
