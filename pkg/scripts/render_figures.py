#!/usr/bin/env python3
"""Render every figure preset to SVG files under out/figures/."""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from lemniscate import FIGURE_PRESETS, BernoulliConfig, Point, emit_svg, figure_scene


def main():
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "out" / "figures"
    out_dir.mkdir(parents=True, exist_ok=True)
    config = BernoulliConfig(Point(-1.0, 0.0), Point(1.0, 0.0))
    for preset in FIGURE_PRESETS:
        started = time.perf_counter()
        text = emit_svg(figure_scene(preset, config))
        path = out_dir / f"{preset}.svg"
        path.write_text(text, encoding="utf-8")
        print(f"{preset:>14}  {len(text):7d} bytes  {time.perf_counter() - started:5.2f}s  -> {path}")


if __name__ == "__main__":
    main()
