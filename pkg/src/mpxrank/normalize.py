"""Four ways of turning raw per-layer degrees into comparable scores.

M1  min-max scaling with extrema taken over the common nodes only.
M2  min-max scaling with extrema taken over all nodes of the layer.
M3  M2 scaled by the layer's maximum degree over the largest degree in any layer.
M4  degree rank within the layer divided by the layer's order.

Every method is oriented so that a higher value means a more central node.
For M4 the stored value is ``1 - r/n``; the raw ``r/n`` is available through
:func:`rank_fraction`. A layer in which all relevant degrees coincide cannot
discriminate between nodes, so M1/M2 assign 0.5 to every node of it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import (
    CentralityMatrix,
    DegreeMode,
    Layer,
    MultiplexNetwork,
    degree_matrix,
    layer_degrees,
    node_sort_key,
)

__all__ = [
    "Method",
    "NormalizedMatrix",
    "norm_method1",
    "norm_method2",
    "norm_method3",
    "norm_method4",
    "competition_ranks",
    "rank_fraction",
    "normalize",
    "normalize_layer",
    "cumulative_distribution",
]

DEGENERATE_VALUE = 0.5


class Method(enum.IntEnum):
    M1 = 1
    M2 = 2
    M3 = 3
    M4 = 4

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, text) -> "Method":
        text = str(text).strip().upper()
        return cls[text] if text.startswith("M") else cls(int(text))


ALL_METHODS = tuple(Method)


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    method: Method
    node_order: tuple
    layer_names: tuple
    values: np.ndarray

    def column(self, layer: str | int) -> np.ndarray:
        j = self.layer_names.index(layer) if isinstance(layer, str) else layer
        return self.values[:, j]

    def row(self, node: str) -> np.ndarray:
        return self.values[self.node_order.index(node)]


def _minmax(deg: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    deg = np.asarray(deg, dtype=float)
    lo = np.asarray(lo, dtype=float)
    span = np.asarray(hi, dtype=float) - lo
    flat = span == 0
    out = (deg - lo) / np.where(flat, 1.0, span)
    return np.where(flat, DEGENERATE_VALUE, out)


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.ascontiguousarray(values, dtype=float)
    values.setflags(write=False)
    return values


def norm_method1(matrix: CentralityMatrix) -> NormalizedMatrix:
    """Min-max scale each column using the extrema of the rows present."""
    deg = np.asarray(matrix.values, dtype=float)
    if deg.shape[0] == 0:
        values = deg
    else:
        values = _minmax(deg, deg.min(axis=0), deg.max(axis=0))
    return NormalizedMatrix(Method.M1, matrix.node_order, matrix.layer_names, _frozen(values))


def norm_method2(matrix: CentralityMatrix, layer_min: Sequence[float], layer_max: Sequence[float]) -> NormalizedMatrix:
    """Min-max scale each column using extrema over the whole layer.

    ``layer_min``/``layer_max`` come from all nodes of each layer, so the
    rows of ``matrix`` need not reach 0 or 1.
    """
    values = _minmax(matrix.values, layer_min, layer_max)
    return NormalizedMatrix(Method.M2, matrix.node_order, matrix.layer_names, _frozen(values))


def _layer_share(layer_max, global_max) -> np.ndarray:
    layer_max = np.asarray(layer_max, dtype=float)
    if global_max == 0:
        return np.ones_like(layer_max)
    return layer_max / float(global_max)


def norm_method3(norm2: NormalizedMatrix, layer_max: Sequence[float], global_max: float) -> NormalizedMatrix:
    """Scale M2 scores by each layer's maximum degree relative to ``global_max``."""
    values = norm2.values * _layer_share(layer_max, global_max)[None, :]
    return NormalizedMatrix(Method.M3, norm2.node_order, norm2.layer_names, _frozen(values))


def competition_ranks(degrees: dict) -> dict:
    """Rank nodes by non-increasing degree; tied nodes share the smallest rank.

    Node 1 is the highest degree. A tie group of size k at rank r pushes the
    next distinct degree to rank r + k.
    """
    order = sorted(degrees, key=lambda v: (-degrees[v], v))
    ranks = {}
    prev = None
    rank = 0
    for position, v in enumerate(order, 1):
        if degrees[v] != prev:
            rank = position
            prev = degrees[v]
        ranks[v] = rank
    return ranks


def rank_fraction(degrees: dict) -> dict:
    """The unoriented M4 score ``r/n``: small for central nodes."""
    n = len(degrees)
    return {v: r / n for v, r in competition_ranks(degrees).items()}


def norm_method4(per_layer_degrees: Sequence[dict], nodes: Sequence[str], layer_names: Sequence[str] | None = None) -> NormalizedMatrix:
    """Oriented rank score ``1 - r(v)/n`` per layer, restricted to ``nodes``.

    ``per_layer_degrees[j]`` holds the degrees of all nodes of layer j.
    """
    nodes = tuple(nodes)
    values = np.zeros((len(nodes), len(per_layer_degrees)))
    for j, degrees in enumerate(per_layer_degrees):
        fractions = rank_fraction(degrees)
        for i, v in enumerate(nodes):
            values[i, j] = 1.0 - fractions[v]
    if layer_names is None:
        layer_names = tuple(str(j) for j in range(len(per_layer_degrees)))
    return NormalizedMatrix(Method.M4, nodes, tuple(layer_names), _frozen(values))


def _extrema(network: MultiplexNetwork, mode) -> tuple[list, list, list]:
    per_layer = [layer_degrees(layer, mode) for layer in network.layers]
    lo = [min(d.values()) if d else 0 for d in per_layer]
    hi = [max(d.values()) if d else 0 for d in per_layer]
    return per_layer, lo, hi


def normalize(
    network: MultiplexNetwork,
    method: Method | int | str,
    mode: DegreeMode | str = DegreeMode.TOTAL,
    nodes: Sequence[str] | None = None,
) -> NormalizedMatrix:
    """Normalized scores of ``nodes`` (default: the common nodes) in every layer."""
    method = method if isinstance(method, Method) else Method.parse(method)
    matrix = degree_matrix(network, nodes, mode)
    if method is Method.M1:
        return norm_method1(matrix)
    per_layer, lo, hi = _extrema(network, mode)
    if method is Method.M4:
        return norm_method4(per_layer, matrix.node_order, matrix.layer_names)
    norm2 = norm_method2(matrix, lo, hi)
    if method is Method.M2:
        return norm2
    return norm_method3(norm2, hi, max(hi))


def normalize_layer(
    network: MultiplexNetwork,
    layer: Layer | str,
    method: Method | int | str,
    mode: DegreeMode | str = DegreeMode.TOTAL,
) -> dict:
    """Scores of every node of one layer, ``{label: value}``.

    M1 is only defined over the common nodes, so for M1 only those are
    returned.
    """
    method = method if isinstance(method, Method) else Method.parse(method)
    name = layer if isinstance(layer, str) else layer.name
    j = network.layer_names.index(name)
    target = network.layers[j]
    if method is Method.M1:
        nm = normalize(network, method, mode)
        return dict(zip(nm.node_order, nm.values[:, j].tolist()))
    per_layer, lo, hi = _extrema(network, mode)
    degrees = per_layer[j]
    order = sorted(target.nodes, key=node_sort_key)
    if method is Method.M4:
        fractions = rank_fraction(degrees)
        return {v: 1.0 - fractions[v] for v in order}
    deg = np.array([degrees[v] for v in order], dtype=float)
    values = _minmax(deg, lo[j], hi[j])
    if method is Method.M3:
        values = values * _layer_share([hi[j]], max(hi))[0]
    return dict(zip(order, values.tolist()))


def cumulative_distribution(values) -> list[tuple[float, float]]:
    """Fraction of values at least ``x``, at every distinct observed ``x``.

    >>> cumulative_distribution([0, 0, 1, 1])
    [(0.0, 1.0), (1.0, 0.5)]
    """
    data = np.sort(np.asarray(values, dtype=float).ravel())
    if data.size == 0:
        return []
    xs = np.unique(data)
    below = np.searchsorted(data, xs, side="left")
    ys = (data.size - below) / data.size
    return [(float(x), float(y)) for x, y in zip(xs, ys)]
