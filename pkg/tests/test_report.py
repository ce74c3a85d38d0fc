import pytest

from cwham.report import BenchRow, loglog_slope, plot_bench, read_csv, write_csv


ROWS = [BenchRow("rep", 10, 4, 50, 3, True), BenchRow("rep", 20, 4, 90, 12, True),
        BenchRow("naive", 10, 4, 60, 4, True)]


def test_csv_round_trip(tmp_path):
    path = tmp_path / "b.csv"
    write_csv(ROWS, path)
    assert path.read_text().splitlines()[0] == "engine,n,k,max_states,elapsed_ms,hamiltonian"
    assert read_csv(path) == ROWS


def test_loglog_slope():
    assert loglog_slope([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        loglog_slope([1], [1])


def test_plot_writes_file(tmp_path):
    out = tmp_path / "b.png"
    plot_bench(ROWS, out, title="t")
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
