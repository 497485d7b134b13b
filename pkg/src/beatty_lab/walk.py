"""Cloitre walks of bit streams, with SVG and binary PGM rendering.

The walk starts at the origin facing (1, 0).  For every bit it first turns
(clockwise on 0, counter-clockwise on 1) and then takes one unit step.  Walk
coordinates are mathematical (y up); only the SVG writer flips y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._parallel import chunk_ranges

__all__ = [
    "Heading",
    "Walk",
    "WalkStats",
    "EAST",
    "cloitre_walk",
    "walk_stats",
    "render_svg",
    "render_pgm",
    "MAX_RASTER_SIDE",
]

MAX_RASTER_SIDE = 1 << 14


class Heading(NamedTuple):
    dx: int
    dy: int

    def right(self) -> "Heading":
        return Heading(self.dy, -self.dx)

    def left(self) -> "Heading":
        return Heading(-self.dy, self.dx)


EAST = Heading(1, 0)

Point = tuple[int, int]


@dataclass(frozen=True)
class Walk:
    points: list[Point]
    final_heading: Heading


class WalkStats(NamedTuple):
    endpoint: Point
    bbox: tuple[int, int, int, int]  # min_x, min_y, max_x, max_y
    distinct_points: int


def cloitre_walk(bits: Iterable[int]) -> Walk:
    x = y = 0
    dx, dy = EAST
    points = [(0, 0)]
    append = points.append
    for bit in bits:
        if bit == 1:
            dx, dy = -dy, dx
        elif bit == 0:
            dx, dy = dy, -dx
        else:
            raise ValueError(f"not a bit: {bit!r}")
        x += dx
        y += dy
        append((x, y))
    return Walk(points, Heading(dx, dy))


def _partial_stats(points: list[Point]) -> tuple[int, int, int, int, set]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys), set(points)


def walk_stats(walk: Walk, chunks: int = 1) -> WalkStats:
    """Endpoint, bounding box and number of distinct lattice points.

    ``chunks`` splits the aggregation; the result does not depend on it.
    """
    pts = walk.points
    if not pts:
        raise ValueError("empty walk")
    parts = [_partial_stats(pts[lo:hi + 1]) for lo, hi in chunk_ranges(0, len(pts) - 1, chunks)]
    seen = set().union(*(p[4] for p in parts))
    bbox = (
        min(p[0] for p in parts),
        min(p[1] for p in parts),
        max(p[2] for p in parts),
        max(p[3] for p in parts),
    )
    return WalkStats(pts[-1], bbox, len(seen))


def _fmt(value: float) -> str:
    return format(value, "g")


def render_svg(walk: Walk, stroke_width: float = 1, margin: int = 2) -> str:
    """SVG 1.1 document with a single black polyline on a white background."""
    if stroke_width <= 0:
        raise ValueError("stroke_width must be positive")
    if margin < 0:
        raise ValueError("margin must be >= 0")
    min_x, min_y, max_x, max_y = walk_stats(walk).bbox
    left, top = min_x - margin, -max_y - margin
    width = max_x - min_x + 2 * margin
    height = max_y - min_y + 2 * margin
    coords = " ".join(f"{x},{-y}" for x, y in walk.points)
    return (
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="{left} {top} {width} {height}">\n'
        f'<rect x="{left}" y="{top}" width="{width}" height="{height}" fill="white"/>\n'
        f'<polyline fill="none" stroke="black" stroke-width="{_fmt(stroke_width)}" '
        'stroke-linejoin="round" stroke-linecap="round" '
        f'points="{coords}"/>\n'
        "</svg>\n"
    )


def render_pgm(walk: Walk, margin: int = 2) -> bytes:
    """Binary P5 raster, one pixel per lattice cell: visited 0, background 255."""
    if margin < 0:
        raise ValueError("margin must be >= 0")
    min_x, min_y, max_x, max_y = walk_stats(walk).bbox
    width = max_x - min_x + 1 + 2 * margin
    height = max_y - min_y + 1 + 2 * margin
    if width > MAX_RASTER_SIDE or height > MAX_RASTER_SIDE:
        raise ValueError(f"raster too large: {width}x{height}")
    pixels = bytearray(b"\xff" * (width * height))
    x0 = min_x - margin
    y_top = max_y + margin
    for x, y in walk.points:
        pixels[(y_top - y) * width + (x - x0)] = 0
    return b"P5\n%d %d\n255\n" % (width, height) + bytes(pixels)
