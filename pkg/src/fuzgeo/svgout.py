"""Self-contained SVG rendering of midset curves over the focal supports."""

from __future__ import annotations

from .core import FuzzyPoint
from .midset import Branch, MidsetResult


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _alpha_color(alpha: float, branch: Branch) -> str:
    # ramp toward black as alpha rises; branches use different hues
    if branch is Branch.INVERSE:
        base = (208, 28, 28)
    else:
        base = (28, 28, 208)
    shade = 1.0 - 0.75 * alpha
    r, g, b = (int(round(c * shade)) for c in base)
    return f"#{r:02x}{g:02x}{b:02x}"


def render_midset_svg(a: FuzzyPoint, b: FuzzyPoint, result: MidsetResult,
                      size: int = 640) -> str:
    """One SVG document with support disks, cores and per-alpha curves.

    Curve coordinates are emitted in data units inside a y-flipping group,
    so the raw point lists in the document match the plane geometry.
    """
    xmin, ymin, xmax, ymax = result.bbox
    width = xmax - xmin
    height = ymax - ymin
    scale = size / max(width, height)
    stroke = 1.5 / scale

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width * scale)}" height="{_fmt(height * scale)}" '
        f'viewBox="0 0 {_fmt(width * scale)} {_fmt(height * scale)}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
        f'<g transform="scale({_fmt(scale)},{_fmt(-scale)}) '
        f'translate({_fmt(-xmin)},{_fmt(-ymax)})">',
    ]

    for fp, color in ((a, "#777777"), (b, "#aaaaaa")):
        parts.append(
            f'<ellipse cx="{_fmt(fp.core.x)}" cy="{_fmt(fp.core.y)}" '
            f'rx="{_fmt(fp.spread.p1)}" ry="{_fmt(fp.spread.p2)}" '
            f'fill="none" stroke="{color}" stroke-width="{_fmt(stroke)}"/>')
        parts.append(
            f'<circle cx="{_fmt(fp.core.x)}" cy="{_fmt(fp.core.y)}" '
            f'r="{_fmt(2.0 * stroke)}" fill="{color}"/>')

    for entry in result.entries:
        color = _alpha_color(entry.alpha, entry.branch)
        for polyline in entry.polylines:
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in polyline)
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" '
                f'stroke-width="{_fmt(stroke)}"/>')

    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
