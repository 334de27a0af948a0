#!/usr/bin/env python3
"""Grid convergence study: traced polygon area against the exact value.

The enclosed area of the curve is exactly half the squared focal
distance; the traced area comes from the shoelace formula over the
refined contour polygons, so the error should shrink roughly with the
square of the cell size.
"""

import math
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from lemniscate import (
    BernoulliConfig,
    Point,
    TraceWindow,
    bernoulli_area,
    contour_area,
    trace,
)


def main():
    config = BernoulliConfig(Point(-1.0, 0.0), Point(1.0, 0.0))
    exact = bernoulli_area(config)
    print(f"exact area: {exact}")
    print(f"{'grid':>6} {'contours':>8} {'area':>18} {'rel err':>12} {'ratio':>7} {'time':>7}")
    previous = None
    for grid in (64, 128, 256, 512, 1024, 2048):
        started = time.perf_counter()
        contours = trace(config.lemniscate, TraceWindow(-1.6, 1.6, -0.8, 0.8, grid, grid))
        total = sum(contour_area(c) for c in contours)
        err = abs(total - exact) / exact
        ratio = previous / err if previous else math.nan
        previous = err
        print(
            f"{grid:>6} {len(contours):>8} {total:>18.12f} {err:>12.3e} "
            f"{ratio:>7.2f} {time.perf_counter() - started:>6.2f}s"
        )


if __name__ == "__main__":
    main()
