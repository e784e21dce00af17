"""Scaling measurements for LCDM embedding."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .codec import CoverImage, embed_with_report
from .lcdm import DistortionMap, make_lcdm
from .matrix_baseline import memory_footprint


@dataclass(frozen=True)
class BenchRecord:
    n: int
    msg_len: int
    seed: int
    comparisons: int
    nonzero_heads: int
    wall_time: float
    matrix_bytes: Fraction
    poly_bytes: Fraction


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r_squared: float


CSV_COLUMNS = (
    "n", "msg_len", "seed", "comparisons", "nonzero_heads",
    "wall_time", "matrix_bytes", "poly_bytes",
)


def message_length(n: int, msg_rate: float) -> int:
    return min(n - 1, max(1, round(n * msg_rate)))


def run_one(n: int, msg_rate: float, seed: int) -> BenchRecord:
    """Embed a random message into a random cover of ``n`` pixels."""
    msg_len = message_length(n, msg_rate)
    rng = np.random.default_rng([seed, n])
    code = make_lcdm(n, msg_len)
    cover = CoverImage(rng.integers(0, 256, size=n, dtype=np.uint8))
    message = rng.integers(0, 2, size=msg_len, dtype=np.uint8)
    costs = DistortionMap(rng.random(n))
    t0 = time.perf_counter()
    rep = embed_with_report(code, cover, message, "dffa", costs)
    elapsed = time.perf_counter() - t0
    matrix_bytes, poly_bytes = memory_footprint(n, msg_len)
    return BenchRecord(
        n, msg_len, seed, rep.comparisons, rep.e_base.weight, elapsed, matrix_bytes, poly_bytes
    )


def run_suite(
    sizes: Sequence[int], msg_rate: float, seed: int, repeats: int = 1
) -> list[BenchRecord]:
    """One record per (size, repeat); repeat ``r`` uses seed ``seed + r``."""
    if not sizes:
        raise ValueError("sizes must be nonempty")
    if not 0 < msg_rate < 1:
        raise ValueError(f"msg_rate must lie in (0, 1), got {msg_rate}")
    if repeats < 1:
        raise ValueError("repeats must be positive")
    return [run_one(n, msg_rate, seed + r) for n in sizes for r in range(repeats)]


def linear_fit(xs: Iterable[float], ys: Iterable[float]) -> LinearFit:
    """Least-squares line with its coefficient of determination."""
    x = np.asarray(list(xs), dtype=np.float64)
    y = np.asarray(list(ys), dtype=np.float64)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - float((resid**2).sum()) / ss_tot if ss_tot else 1.0
    return LinearFit(float(slope), float(intercept), r2)


def mean_by_size(records: Sequence[BenchRecord]) -> dict[int, float]:
    groups: dict[int, list[int]] = {}
    for r in records:
        groups.setdefault(r.n, []).append(r.comparisons)
    return {n: float(np.mean(v)) for n, v in groups.items()}


def _num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else repr(float(x))


def to_csv_rows(records: Sequence[BenchRecord], with_time: bool = True) -> list[str]:
    rows = [",".join(CSV_COLUMNS)]
    for r in records:
        t = f"{r.wall_time:.6f}" if with_time else ""
        rows.append(
            f"{r.n},{r.msg_len},{r.seed},{r.comparisons},{r.nonzero_heads},"
            f"{t},{_num(r.matrix_bytes)},{_num(r.poly_bytes)}"
        )
    return rows
