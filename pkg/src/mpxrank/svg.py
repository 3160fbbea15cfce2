"""Minimal SVG charts: polylines, step curves and labelled scatter plots.

Every plotted series is a single ``<polyline class="series">`` (or, for
scatter plots, one ``<g class="series">``) carrying a ``data-label``
attribute, which keeps the output easy to inspect in tests.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")

WIDTH, HEIGHT = 760, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 170, 50, 60


class _Canvas:
    def __init__(self, title: str, x_label: str, y_label: str, x_range, y_range):
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        if self.x1 == self.x0:
            self.x0, self.x1 = self.x0 - 1, self.x1 + 1
        if self.y1 == self.y0:
            self.y0, self.y1 = self.y0 - 1, self.y1 + 1
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
            '<rect width="100%" height="100%" fill="#ffffff"/>',
            f'<text x="{WIDTH / 2:.1f}" y="28" text-anchor="middle" font-size="16">{escape(title)}</text>',
        ]
        self._axes(x_label, y_label)

    @property
    def plot_w(self):
        return WIDTH - LEFT - RIGHT

    @property
    def plot_h(self):
        return HEIGHT - TOP - BOTTOM

    def px(self, x: float) -> float:
        return LEFT + (x - self.x0) / (self.x1 - self.x0) * self.plot_w

    def py(self, y: float) -> float:
        return TOP + self.plot_h - (y - self.y0) / (self.y1 - self.y0) * self.plot_h

    def _axes(self, x_label, y_label):
        bottom, right = TOP + self.plot_h, LEFT + self.plot_w
        p = self.parts
        p.append(f'<line x1="{LEFT}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="#000"/>')
        p.append(f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{bottom}" stroke="#000"/>')
        for k in range(6):
            xv = self.x0 + (self.x1 - self.x0) * k / 5
            yv = self.y0 + (self.y1 - self.y0) * k / 5
            x, y = self.px(xv), self.py(yv)
            p.append(f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 5}" stroke="#000"/>')
            p.append(f'<text x="{x:.2f}" y="{bottom + 20}" text-anchor="middle" font-size="11">{_tick(xv)}</text>')
            p.append(f'<line x1="{LEFT}" y1="{y:.2f}" x2="{right}" y2="{y:.2f}" stroke="#e5e5e5"/>')
            p.append(f'<text x="{LEFT - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="11">{_tick(yv)}</text>')
        p.append(f'<text x="{LEFT + self.plot_w / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle" font-size="13">{escape(x_label)}</text>')
        p.append(
            f'<text x="18" y="{TOP + self.plot_h / 2:.1f}" text-anchor="middle" font-size="13" '
            f'transform="rotate(-90 18 {TOP + self.plot_h / 2:.1f})">{escape(y_label)}</text>'
        )

    def polyline(self, label: str, points: Sequence[tuple[float, float]], color: str):
        coords = " ".join(f"{self.px(x):.2f},{self.py(y):.2f}" for x, y in points)
        self.parts.append(
            f'<polyline class="series" data-label={quoteattr(label)} fill="none" '
            f'stroke="{color}" stroke-width="2" points="{coords}"/>'
        )

    def legend(self, labels: Sequence[str]):
        x = LEFT + self.plot_w + 20
        for i, label in enumerate(labels):
            y = TOP + 15 + i * 20
            color = COLORS[i % len(COLORS)]
            self.parts.append(f'<line x1="{x}" y1="{y}" x2="{x + 22}" y2="{y}" stroke="{color}" stroke-width="3"/>')
            self.parts.append(f'<text x="{x + 28}" y="{y + 4}" font-size="12">{escape(label)}</text>')

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>", ""])


def _tick(value: float) -> str:
    return f"{value:.3g}"


def _extent(values, pad_zero=False):
    values = list(values)
    lo, hi = (min(values), max(values)) if values else (0.0, 1.0)
    if pad_zero:
        lo = min(lo, 0.0)
    return lo, hi


def line_chart(title, x_label, y_label, series: Sequence[tuple[str, Sequence[tuple[float, float]]]], y_range=None) -> str:
    """One polyline per ``(label, points)`` entry."""
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    canvas = _Canvas(title, x_label, y_label, _extent(xs), y_range or _extent(ys))
    for i, (label, points) in enumerate(series):
        canvas.polyline(label, points, COLORS[i % len(COLORS)])
    canvas.legend([label for label, _ in series])
    return canvas.render()


def step_chart(title, x_label, y_label, series: Sequence[tuple[str, Sequence[tuple[float, float]]]]) -> str:
    """Right-continuous step curves, e.g. survival functions."""
    stepped = []
    for label, points in series:
        path = []
        for k, (x, y) in enumerate(points):
            if k:
                path.append((x, points[k - 1][1]))
            path.append((x, y))
        stepped.append((label, path))
    return line_chart(title, x_label, y_label, stepped, y_range=(0.0, 1.0))


def scatter_chart(
    title,
    x_label,
    y_label,
    points: Sequence[tuple[str, float, float]],
    x_divider: float | None = None,
    y_divider: float | None = None,
    annotate: Sequence[str] = (),
) -> str:
    """Labelled scatter with optional dashed divider lines."""
    xs = [x for _, x, _ in points] + ([x_divider] if x_divider is not None else [])
    ys = [y for _, _, y in points] + ([y_divider] if y_divider is not None else [])
    lo_x, hi_x = _extent(xs, pad_zero=True)
    lo_y, hi_y = _extent(ys, pad_zero=True)
    canvas = _Canvas(title, x_label, y_label, (lo_x, hi_x + 1), (lo_y, hi_y + 1))
    p = canvas.parts
    if x_divider is not None:
        x = canvas.px(x_divider)
        p.append(f'<line class="divider" x1="{x:.2f}" y1="{TOP}" x2="{x:.2f}" y2="{TOP + canvas.plot_h}" stroke="#888" stroke-dasharray="5,4"/>')
    if y_divider is not None:
        y = canvas.py(y_divider)
        p.append(f'<line class="divider" x1="{LEFT}" y1="{y:.2f}" x2="{LEFT + canvas.plot_w}" y2="{y:.2f}" stroke="#888" stroke-dasharray="5,4"/>')
    p.append('<g class="series" data-label="nodes">')
    for label, x, y in points:
        p.append(
            f'<circle cx="{canvas.px(x):.2f}" cy="{canvas.py(y):.2f}" r="3.5" fill="{COLORS[0]}" '
            f'fill-opacity="0.7"><title>{escape(label)}</title></circle>'
        )
    p.append("</g>")
    wanted = set(annotate)
    for label, x, y in points:
        if label in wanted:
            p.append(
                f'<text class="annotation" x="{canvas.px(x) + 6:.2f}" y="{canvas.py(y) - 6:.2f}" '
                f'font-size="11">{escape(label)}</text>'
            )
    return canvas.render()
