"""Plain-text and SVG drawings of lattice paths."""

from .errors import InvalidObjectError
from .paths import LatticePath, _RISE, _RUN


def render(p: LatticePath, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(p)
    if fmt == "svg":
        return render_svg(p)
    raise InvalidObjectError(f"unknown render format {fmt!r}")


def render_ascii(p: LatticePath) -> str:
    """Character-cell drawing: one column per half-step, one row per unit
    height band, plus a bottom row marking the x-axis.

    U and L render as '/', D as '\\', H as two '_' cells sitting on its
    level; a cell crossed by two different segments renders as 'X'.  The
    empty path renders as the empty string.
    """
    if not p.steps:
        return ""
    cells = {}

    def put(band, col, ch):
        old = cells.get((band, col))
        cells[(band, col)] = ch if old is None or old == ch else "X"

    x = y = 0
    for s in p.steps:
        if s == "U":
            put(y, x, "/")
        elif s == "D":
            put(y - 1, x, "\\")
        elif s == "L":
            put(y - 1, x - 1, "/")
        else:
            put(y, x, "_")
            put(y, x + 1, "_")
        x += _RUN[s]
        y += _RISE[s]
    top = max(band for band, _ in cells)
    width = max(col for _, col in cells) + 1
    rows = [
        "".join(cells.get((band, col), " ") for col in range(width)).rstrip()
        for band in range(top, -1, -1)
    ]
    rows.append("-" * width)
    return "\n".join(rows)


def render_svg(p: LatticePath, unit: int = 20, margin: int = 10) -> str:
    """Standalone SVG drawing with unit-slope segments and a dot at every
    visited lattice point."""
    points = [(0, 0)]
    x = y = 0
    for s in p.steps:
        x += _RUN[s]
        y += _RISE[s]
        points.append((x, y))
    max_x = max(px for px, _ in points)
    max_y = max(py for _, py in points)
    width = max_x * unit + 2 * margin
    height = max_y * unit + 2 * margin

    def sx(px):
        return margin + px * unit

    def sy(py):
        return margin + (max_y - py) * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    if len(points) > 1:
        d = f"M {sx(points[0][0])} {sy(points[0][1])}" + "".join(
            f" L {sx(px)} {sy(py)}" for px, py in points[1:]
        )
        parts.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="1"/>')
    for px, py in dict.fromkeys(points):
        parts.append(f'<circle cx="{sx(px)}" cy="{sy(py)}" r="2" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
