"""Minimal deterministic SVG line plots with no external dependencies."""

from __future__ import annotations

from collections.abc import Sequence

from .analysis import SweepSeries

__all__ = ["render_plot", "series_points"]

WIDTH, HEIGHT = 640, 400
LEFT, RIGHT, TOP, BOTTOM = 70, 20, 40, 50
N_TICKS = 5
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e")


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:.6g}"


def series_points(data: SweepSeries | Sequence[tuple[int, int | float]]) -> list[tuple[float, float]]:
    if isinstance(data, SweepSeries):
        return [(float(p.L), float(p.variance)) for p in data.points]
    return [(float(x), float(y)) for x, y in data]


def render_plot(
    data: SweepSeries | Sequence[tuple[int, int | float]] | Sequence[SweepSeries],
    title: str = "",
    x_label: str = "L",
    y_label: str = "",
) -> str:
    """Render one or more series as an SVG line chart.

    ``data`` is a SweepSeries, an (L, value) list such as argmax_scan output,
    or a list of SweepSeries to overlay.
    """
    if isinstance(data, (list, tuple)) and data and isinstance(data[0], SweepSeries):
        groups = [(s.family.value, series_points(s)) for s in data]
    else:
        label = data.family.value if isinstance(data, SweepSeries) else y_label
        groups = [(label, series_points(data))]
    for _, pts in groups:
        if len(pts) < 2:
            raise ValueError("a plot needs at least 2 points")

    xs = [x for _, pts in groups for x, _ in pts]
    ys = [y for _, pts in groups for _, y in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def px(x: float) -> float:
        return LEFT + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return TOP + ph - (y - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="15" '
                   f'font-family="sans-serif">{_escape(title)}</text>')
    # axes
    out.append(f'<line class="axis" x1="{LEFT}" y1="{TOP + ph}" x2="{LEFT + pw}" y2="{TOP + ph}" stroke="#000"/>')
    out.append(f'<line class="axis" x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{TOP + ph}" stroke="#000"/>')
    for i in range(N_TICKS):
        xv = x0 + (x1 - x0) * i / (N_TICKS - 1)
        yv = y0 + (y1 - y0) * i / (N_TICKS - 1)
        X, Y = px(xv), py(yv)
        out.append(f'<line x1="{_fmt(X)}" y1="{TOP + ph}" x2="{_fmt(X)}" y2="{TOP + ph + 5}" stroke="#000"/>')
        out.append(f'<text x="{_fmt(X)}" y="{TOP + ph + 18}" text-anchor="middle" font-size="11" '
                   f'font-family="sans-serif">{_tick_label(xv)}</text>')
        out.append(f'<line x1="{LEFT - 5}" y1="{_fmt(Y)}" x2="{LEFT}" y2="{_fmt(Y)}" stroke="#000"/>')
        out.append(f'<text x="{LEFT - 8}" y="{_fmt(Y + 4)}" text-anchor="end" font-size="11" '
                   f'font-family="sans-serif">{_tick_label(yv)}</text>')
    out.append(f'<text x="{LEFT + pw / 2:.1f}" y="{HEIGHT - 10}" text-anchor="middle" font-size="12" '
               f'font-family="sans-serif">{_escape(x_label)}</text>')
    if y_label:
        out.append(f'<text x="14" y="{TOP + ph / 2:.1f}" text-anchor="middle" font-size="12" '
                   f'font-family="sans-serif" transform="rotate(-90 14 {TOP + ph / 2:.1f})">'
                   f'{_escape(y_label)}</text>')
    for k, (label, pts) in enumerate(groups):
        coords = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in pts)
        out.append(f'<polyline fill="none" stroke="{COLORS[k % len(COLORS)]}" stroke-width="1.5" '
                   f'points="{coords}"><title>{_escape(label)}</title></polyline>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
