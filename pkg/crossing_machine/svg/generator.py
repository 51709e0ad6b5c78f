"""SVG generator using Jinja2.

Coordinates are mapped affinely into a square viewport with exact fractions and
printed with two decimals, so the same point set always yields the same bytes.
The y axis is flipped so counterclockwise in the plane stays counterclockwise
on screen.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, select_autoescape

from crossing_machine.config import Settings, get_settings
from crossing_machine.geometry import PointSet
from crossing_machine.pointsets import atomic_write

template_dir = Path(__file__).parent
env = Environment(
    loader=FileSystemLoader(template_dir),
    autoescape=select_autoescape(["svg"]),
    keep_trailing_newline=True,
)


def fixed2(value: Fraction) -> str:
    """Render a non-negative fraction with two decimals (round half even)."""
    hundredths = round(value * 100)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def _projector(points: PointSet, size: int, margin: int):
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    min_x, min_y = min(xs), min(ys)
    extent = max(max(xs) - min_x, max(ys) - min_y) or 1
    scale = Fraction(size - 2 * margin, extent)

    def project(x: int, y: int) -> tuple[str, str]:
        sx = margin + (x - min_x) * scale
        sy = size - margin - (y - min_y) * scale
        return fixed2(sx), fixed2(sy)

    return project


def render_svg(points: PointSet, title: str = "", settings: Settings | None = None) -> str:
    """All C(n, 2) segments plus one circle per vertex."""
    settings = settings or get_settings()
    size, margin = settings.svg_viewport, settings.svg_margin
    project = _projector(points, size, margin)
    screen = [project(p.x, p.y) for p in points]
    segments = [
        {"x1": a[0], "y1": a[1], "x2": b[0], "y2": b[1]} for a, b in combinations(screen, 2)
    ]
    vertices = [{"x": x, "y": y} for x, y in screen]
    template = env.get_template("drawing.svg")
    return template.render(
        size=size,
        title=title or f"K_{points.n} on {points.n} points",
        segments=segments,
        vertices=vertices,
        stroke=fixed2(Fraction(size, 1000)),
        radius=fixed2(Fraction(size, 250)),
    )


def write_svg(path: Path | str, points: PointSet, title: str = "") -> None:
    atomic_write(Path(path), render_svg(points, title))
