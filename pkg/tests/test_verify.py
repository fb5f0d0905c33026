"""Grid verification driver: cell checks, reports, worker handling."""

from __future__ import annotations

import json

import pytest

from jetbundles import run_verification, worker_count
from jetbundles.verify import (
    CellResult,
    VerifyReport,
    check_line_cell,
    check_projective_cell,
    check_vanishing_cell,
)


def test_single_line_cell_passes_every_check() -> None:
    result = check_line_cell((2, 1, "left"))
    assert result.ok, result
    assert set(result.checks) >= {
        "cocycle", "determinant", "truncation", "splitting", "c1",
        "ideal_cohomology", "fiber",
    }


def test_projective_and_vanishing_cells() -> None:
    assert check_projective_cell((2, 1, 3)).ok
    assert check_projective_cell((3, 2, 5)).ok
    assert check_vanishing_cell(4).ok


def test_cell_result_rendering() -> None:
    good = CellResult("cell a", {"x": True}, "", 0.0)
    bad = CellResult("cell b", {"x": True, "y": False}, "boom", 0.0)
    assert good.ok and str(good).startswith("pass")
    assert not bad.ok
    assert "y" in str(bad)


def test_small_grid_report() -> None:
    report = run_verification(k_max=2, d_min=-2, d_max=2, n_max=1)
    assert report.all_ok
    assert report.failures() == []
    # 3 orders x 5 twists x 2 sides + vanishing cells for k = 1..8
    assert len(report.cells) == 30 + 8
    assert "passed" in report.summary()
    blob = json.loads(json.dumps(report.to_json()))
    assert blob["all_ok"] is True


def test_band_note_appears_when_the_band_is_covered() -> None:
    report = run_verification(k_max=2, d_min=0, d_max=1, n_max=1)
    assert report.all_ok
    assert any("O(-k-1)" in note for note in report.notes)
    # a grid that misses the band carries no adjudication note
    below = run_verification(k_max=1, d_min=2, d_max=3, n_max=1)
    assert not any("O(-k-1)" in note for note in below.notes)


def test_parallel_map_matches_serial() -> None:
    serial = run_verification(k_max=1, d_min=-1, d_max=1, n_max=1, workers=1)
    parallel = run_verification(k_max=1, d_min=-1, d_max=1, n_max=1, workers=2)
    assert serial.all_ok and parallel.all_ok
    assert [c.label for c in serial.cells] == [c.label for c in parallel.cells]


def test_argument_validation() -> None:
    with pytest.raises(ValueError):
        run_verification(k_max=0)
    with pytest.raises(ValueError):
        run_verification(d_min=3, d_max=-3)
    with pytest.raises(ValueError):
        run_verification(n_max=0)


def test_worker_count_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("JETS_THREADS", "0")
    assert worker_count() == 1
    monkeypatch.setenv("JETS_THREADS", "not a number")
    assert worker_count() == 1
    monkeypatch.setenv("JETS_THREADS", "1")
    assert worker_count() == 1
    monkeypatch.delenv("JETS_THREADS")
    assert worker_count() >= 1
