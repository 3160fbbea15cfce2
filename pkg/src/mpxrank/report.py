"""CSV, JSON and SVG outputs for analysis runs.

CSV files are comma-separated with a header row and LF line endings; beta
values are written with 6 significant digits and scores in shortest
round-trip form, so repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

from .graph import DegreeMode, MultiplexNetwork, layer_degrees
from .normalize import Method, cumulative_distribution, normalize_layer
from .sensitivity import RankingTable, SensitivityRecord
from . import svg

__all__ = [
    "format_beta",
    "dataset_summary",
    "write_summary",
    "read_summary",
    "write_rankings",
    "write_sensitivity",
    "cdf_series",
    "write_cdf",
    "write_curves",
    "write_scatter",
    "extreme_nodes",
]


def format_beta(beta: float) -> str:
    return format(float(beta), ".6g")


def _score(value: float) -> str:
    return repr(float(value))


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def dataset_summary(network: MultiplexNetwork, mode: DegreeMode | str = DegreeMode.TOTAL) -> dict:
    """Per-layer order, size and degree extrema over the layer and over the common nodes."""
    mode = DegreeMode(mode)
    common = network.common_nodes
    layers = []
    for layer in network.layers:
        degrees = layer_degrees(layer, mode)
        shared = [degrees[v] for v in common]
        layers.append({
            "name": layer.name,
            "directed": layer.directed,
            "nodes": layer.n,
            "edges": layer.m,
            "max_degree": max(degrees.values(), default=None),
            "min_degree": min(degrees.values(), default=None),
            "max_degree_common": max(shared, default=None),
            "min_degree_common": min(shared, default=None),
            "self_loops_dropped": layer.self_loops_dropped,
        })
    return {
        "degree_mode": mode.value,
        "common_nodes": len(common),
        "layers": layers,
    }


def write_summary(path, summary: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_summary(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_rankings(path, table: RankingTable) -> int:
    """Write ``node,method,beta,position,score`` rows; returns the row count."""
    rows = 0
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = _writer(fh)
        out.writerow(["node", "method", "beta", "position", "score"])
        for i, node in enumerate(table.node_order):
            for m, method in enumerate(table.methods):
                for b, beta in enumerate(table.betas):
                    out.writerow([
                        node, str(method), format_beta(beta),
                        int(table.positions[i, m, b]), _score(table.scores[i, m, b]),
                    ])
                    rows += 1
    return rows


def write_sensitivity(path, records: Sequence[SensitivityRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = _writer(fh)
        out.writerow(["node", "delta_agg", "delta_norm", "quadrant"])
        for r in records:
            out.writerow([r.node, r.delta_agg, r.delta_norm, r.quadrant])


def cdf_series(network: MultiplexNetwork, method: Method, mode: DegreeMode | str = DegreeMode.TOTAL) -> list:
    """``[(layer name, [(x, y), ...]), ...]`` over each layer's scored nodes."""
    series = []
    for layer in network.layers:
        values = normalize_layer(network, layer, method, mode).values()
        series.append((layer.name, cumulative_distribution(list(values))))
    return series


def write_cdf(out_dir: Path, series, method: Method, formats: Iterable[str]) -> list[Path]:
    formats = set(formats)
    written = []
    if "csv" in formats:
        path = out_dir / "cdf.csv"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            out = _writer(fh)
            out.writerow(["layer", "x", "fraction_at_least"])
            for name, points in series:
                for x, y in points:
                    out.writerow([name, _score(x), _score(y)])
        written.append(path)
    if "svg" in formats:
        path = out_dir / "cdf.svg"
        path.write_text(
            svg.step_chart(f"Normalized degree ({method})", "normalized degree x", "fraction of nodes with value >= x", series),
            encoding="utf-8",
        )
        written.append(path)
    return written


def _safe_name(label: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in label)


def write_curves(out_dir: Path, table: RankingTable, nodes: Sequence[str], formats: Iterable[str]) -> list[Path]:
    """Position-against-beta series per node, one series per method."""
    formats = set(formats)
    written = []
    if "csv" in formats:
        path = out_dir / "curves.csv"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            out = _writer(fh)
            out.writerow(["node", "method", "beta", "position"])
            for node in nodes:
                for method in table.methods:
                    for beta, pos in table.curve(node, method):
                        out.writerow([node, str(method), format_beta(beta), pos])
        written.append(path)
    if "svg" in formats:
        for node in nodes:
            series = [(str(m), [(b, float(p)) for b, p in table.curve(node, m)]) for m in table.methods]
            path = out_dir / f"curves_{_safe_name(node)}.svg"
            path.write_text(
                svg.line_chart(
                    f"Ranking position of {node} among {len(table)} common nodes",
                    "beta", "position (higher = more central)", series, y_range=(1, len(table)),
                ),
                encoding="utf-8",
            )
            written.append(path)
    return written


def extreme_nodes(records: Sequence[SensitivityRecord], count: int = 3) -> list[str]:
    """Nodes worth labelling: the largest deltas on each axis and the most and least sensitive overall."""
    if not records:
        return []
    chosen = []
    by_agg = sorted(records, key=lambda r: -r.delta_agg)
    by_norm = sorted(records, key=lambda r: -r.delta_norm)
    least = sorted(records, key=lambda r: r.delta_agg + r.delta_norm)
    for group in (records[:count], by_agg[:1], by_norm[:1], least[:1]):
        for r in group:
            if r.node not in chosen:
                chosen.append(r.node)
    return chosen


def write_scatter(out_dir: Path, records: Sequence[SensitivityRecord], tau_agg: int, tau_norm: int, formats: Iterable[str]) -> list[Path]:
    formats = set(formats)
    written = []
    if "csv" in formats:
        path = out_dir / "scatter.csv"
        write_sensitivity(path, records)
        written.append(path)
    if "svg" in formats:
        path = out_dir / "scatter.svg"
        points = [(r.node, r.delta_agg, r.delta_norm) for r in records]
        path.write_text(
            svg.scatter_chart(
                "Ranking sensitivity", "delta_agg (aggregation)", "delta_norm (normalization)",
                points, x_divider=tau_agg + 0.5, y_divider=tau_norm + 0.5, annotate=extreme_nodes(records),
            ),
            encoding="utf-8",
        )
        written.append(path)
    return written
