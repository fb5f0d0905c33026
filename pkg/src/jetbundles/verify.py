"""Grid verification: every classified statement checked on every cell.

One cell of the line grid is a pair (k, d) with a side; the checks run
the whole chain on it: cocycle invertibility, the determinant law, the
truncation embedding, three-way splitting agreement (dimension-count
route, factorization witness, closed form), the ideal-sheaf dimension
balance, and the equivariant fiber match.  Higher-dimensional cells
check the fiber match plus rank and first-Chern-class consistency.

Workers: cells are independent, so the runner fans out to a process
pool when JETS_THREADS asks for more than one worker; report assembly
happens in the parent either way.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from math import comb

from .cohomology import (
    h0_line_bundle,
    jet_c1,
    jet_rank,
    line_bundle_cohomology,
    restriction_sequence_balance,
    twisted_ideal_cohomology,
)
from .birkhoff import birkhoff_factorize
from .equivariant import ideal_cohomology_weights, verify_fiber
from .jets import (
    JetSpec,
    Side,
    build_matrix,
    expected_det_exponent,
    truncation_check,
    verify_cocycle,
)
from .splitting import predicted_splitting, splitting_from_h0


@dataclass
class CellResult:
    """Outcome of every check run on one grid cell."""

    label: str
    checks: dict[str, bool]
    detail: str = ""
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __str__(self) -> str:
        if self.ok:
            return f"pass  {self.label}"
        failed = ", ".join(name for name, good in self.checks.items() if not good)
        text = f"FAIL  {self.label}  [{failed}]"
        return f"{text}  {self.detail}" if self.detail else text


@dataclass
class VerifyReport:
    """All cell results plus grid-level findings."""

    cells: list[CellResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def all_ok(self) -> bool:
        return all(cell.ok for cell in self.cells)

    def failures(self) -> list[CellResult]:
        return [cell for cell in self.cells if not cell.ok]

    def summary(self) -> str:
        lines = [
            f"{len(self.cells) - len(self.failures())}/{len(self.cells)} "
            f"cells passed in {self.elapsed:.2f}s"
        ]
        lines.extend(str(cell) for cell in self.failures())
        lines.extend(self.notes)
        return "\n".join(lines)

    def to_json(self) -> dict[str, object]:
        return {
            "all_ok": self.all_ok,
            "elapsed": round(self.elapsed, 3),
            "notes": list(self.notes),
            "cells": [
                {
                    "label": cell.label,
                    "ok": cell.ok,
                    "checks": dict(cell.checks),
                    "detail": cell.detail,
                }
                for cell in self.cells
            ],
        }


def worker_count() -> int:
    """Worker cap from JETS_THREADS, clamped to the visible CPUs."""
    raw = os.environ.get("JETS_THREADS", "1")
    try:
        requested = int(raw)
    except ValueError:
        return 1
    return max(1, min(requested, os.cpu_count() or 1))


def check_line_cell(args: tuple[int, int, str]) -> CellResult:
    """All checks for one (k, d, side) cell of the line grid."""
    k, d, side_name = args
    side = Side(side_name)
    start = time.perf_counter()
    label = f"N=1 k={k} d={d} side={side}"
    checks: dict[str, bool] = {}
    detail = ""
    matrix = build_matrix(k, d, side)

    checks["cocycle"] = verify_cocycle(matrix)
    det = matrix.det()
    checks["determinant"] = (
        det.is_unit()
        and abs(det.unit_parts()[0]) == 1
        and det.unit_parts()[1] == expected_det_exponent(k, d)
    )
    checks["truncation"] = truncation_check(k, d, side) if k >= 1 else True

    try:
        by_h0 = splitting_from_h0(matrix)
        witness = birkhoff_factorize(matrix)
        predicted = predicted_splitting(JetSpec(1, k, d, side))
        checks["splitting"] = (
            by_h0 == witness.splitting() == predicted
            and witness.verify(matrix)
        )
        if not checks["splitting"]:
            detail = (
                f"h0 route {by_h0}, witness {witness.splitting()}, "
                f"closed form {predicted}"
            )
        checks["c1"] = (
            by_h0.c1 == jet_c1(1, k, d) == expected_det_exponent(k, d)
        )
    except Exception as exc:  # deliberate: a cell must never kill the grid
        checks["splitting"] = False
        checks["c1"] = False
        detail = f"{type(exc).__name__}: {exc}"

    ideal = twisted_ideal_cohomology(k, d)
    weight_h0, weight_h1 = ideal_cohomology_weights(k, d)
    checks["ideal_cohomology"] = (
        ideal.h(0) == max(d - k, 0) == weight_h0.dimension
        and ideal.h(1) == max(k - d, 0) == weight_h1.dimension
        and restriction_sequence_balance(k, d) == 0
    )

    try:
        checks["fiber"] = verify_fiber(JetSpec(1, k, d, side)).match
    except Exception as exc:
        checks["fiber"] = False
        detail = detail or f"{type(exc).__name__}: {exc}"

    return CellResult(
        label=label,
        checks=checks,
        detail=detail,
        elapsed=time.perf_counter() - start,
    )


def check_projective_cell(args: tuple[int, int, int]) -> CellResult:
    """Fiber, rank and c1 checks for one (N, k, d) cell, left structure."""
    N, k, d = args
    start = time.perf_counter()
    label = f"N={N} k={k} d={d} side=left"
    checks: dict[str, bool] = {}
    detail = ""
    try:
        report = verify_fiber(JetSpec(N, k, d, Side.LEFT))
        checks["fiber"] = report.match
        checks["rank"] = report.predicted.dimension == jet_rank(N, k, 1) == comb(
            N + k, N
        )
        if not report.match:
            detail = f"predicted {report.predicted}, oracle {report.oracle}"
    except Exception as exc:
        checks["fiber"] = False
        checks["rank"] = False
        detail = f"{type(exc).__name__}: {exc}"
    checks["c1"] = jet_c1(N, k, d) == comb(N + k, N) * (d - k)
    return CellResult(
        label=label,
        checks=checks,
        detail=detail,
        elapsed=time.perf_counter() - start,
    )


def check_vanishing_cell(k: int) -> CellResult:
    """Side conditions h^1(O(k+1)) = 0 and h^0(O(-k-3)) = 0 on the line."""
    start = time.perf_counter()
    checks = {
        "h1_positive_twist": line_bundle_cohomology(1, k + 1).h(1) == 0,
        "h0_negative_twist": h0_line_bundle(1, -k - 3) == 0,
    }
    return CellResult(
        label=f"vanishing k={k}",
        checks=checks,
        elapsed=time.perf_counter() - start,
    )


def _band_note(k_max: int, d_min: int, d_max: int) -> str | None:
    band = [
        (k, d)
        for k in range(1, k_max + 1)
        for d in range(max(d_min, 0), min(d_max, k - 1) + 1)
    ]
    if not band:
        return None
    return (
        "Mid-band cells (0 <= d < k) confirm the splitting "
        "O(0)^(d+1) + O(-k-1)^(k-d): rank k+1 and degree (k+1)d - k(k+1) "
        "match the computed multisets on every such cell. For d >= 1 the "
        "computation is inconsistent with the alternative closed form "
        "O(0)^(d+1) + O(d-k-1)^k, whose rank d+k+1 and degree k(d-k-1) "
        "both disagree; at d = 0 the two forms coincide."
    )


def run_verification(
    k_max: int = 6,
    d_min: int = -6,
    d_max: int = 6,
    n_max: int = 3,
    workers: int | None = None,
) -> VerifyReport:
    """Run the full grid and collect one CellResult per cell.

    Line cells cover 0 <= k <= k_max and d_min <= d <= d_max on both
    sides; higher-dimensional cells cover 2 <= N <= n_max with
    1 <= k < d <= d_max; vanishing side conditions run for k up to
    max(8, k_max).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if d_min > d_max:
        raise ValueError("d_min must be <= d_max")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    start = time.perf_counter()
    line_args = [
        (k, d, side.value)
        for k in range(0, k_max + 1)
        for d in range(d_min, d_max + 1)
        for side in (Side.LEFT, Side.RIGHT)
    ]
    proj_args = [
        (N, k, d)
        for N in range(2, n_max + 1)
        for k in range(1, k_max + 1)
        for d in range(k + 1, d_max + 1)
    ]
    if workers is None:
        workers = worker_count()
    cells: list[CellResult] = []
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells.extend(pool.map(check_line_cell, line_args))
            cells.extend(pool.map(check_projective_cell, proj_args))
    else:
        cells.extend(map(check_line_cell, line_args))
        cells.extend(map(check_projective_cell, proj_args))
    cells.extend(check_vanishing_cell(k) for k in range(1, max(8, k_max) + 1))
    report = VerifyReport(cells=cells)
    if all(c.ok for c in cells):
        note = _band_note(k_max, d_min, d_max)
        if note:
            report.notes.append(note)
    report.elapsed = time.perf_counter() - start
    return report
