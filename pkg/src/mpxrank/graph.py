"""Immutable multiplex graph model: layers, node registry, degrees, common nodes.

A multiplex network here is an ordered list of simple graphs (layers) over a
shared label space, without interlayer edges. Node identity across layers is
string-label equality.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import NodeNotInLayer

__all__ = [
    "DegreeMode",
    "Layer",
    "MultiplexNetwork",
    "CentralityMatrix",
    "degree",
    "layer_degrees",
    "common_nodes",
    "degree_matrix",
    "node_sort_key",
]


class DegreeMode(str, enum.Enum):
    TOTAL = "total"
    IN = "in"
    OUT = "out"


_DIGITS = re.compile(r"(\d+)")


def node_sort_key(label: str):
    """Natural sort key, so that "9" lists before "10"."""
    return tuple(
        (0, int(part), part) if part.isdigit() else (1, 0, part)
        for part in _DIGITS.split(label)
        if part
    )


@dataclass(frozen=True, eq=False)
class Layer:
    """One simple graph of a multiplex network.

    Undirected edges are stored canonically as ``(min(u, v), max(u, v))``.
    Use :meth:`from_edges` to build a layer from raw, possibly dirty, edges.
    """

    name: str
    directed: bool
    nodes: frozenset
    edges: frozenset
    self_loops_dropped: int = 0
    _out: Mapping[str, int] = field(init=False, repr=False)
    _in: Mapping[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        out_deg: Counter = Counter()
        in_deg: Counter = Counter()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"layer {self.name!r}: self-loop on {u!r}")
            if u not in self.nodes or v not in self.nodes:
                raise ValueError(f"layer {self.name!r}: edge ({u!r}, {v!r}) has an endpoint outside the node set")
            if not self.directed and u > v:
                raise ValueError(f"layer {self.name!r}: undirected edge ({u!r}, {v!r}) is not canonical")
            out_deg[u] += 1
            in_deg[v] += 1
        object.__setattr__(self, "_out", dict(out_deg))
        object.__setattr__(self, "_in", dict(in_deg))

    @classmethod
    def from_edges(
        cls,
        name: str,
        edges: Iterable[tuple],
        directed: bool = False,
        nodes: Iterable[str] | None = None,
    ) -> "Layer":
        """Build a simple layer: duplicates collapse, self-loops are dropped and counted.

        Endpoint labels are added to ``nodes``; extra ``nodes`` become isolated.
        """
        node_set = set(nodes) if nodes is not None else set()
        edge_set = set()
        loops = 0
        for u, v in edges:
            u, v = str(u), str(v)
            node_set.add(u)
            node_set.add(v)
            if u == v:
                loops += 1
                continue
            if not directed and u > v:
                u, v = v, u
            edge_set.add((u, v))
        return cls(name, directed, frozenset(node_set), frozenset(edge_set), loops)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_degree(self, v: str) -> int:
        return self._out.get(v, 0)

    def in_degree(self, v: str) -> int:
        return self._in.get(v, 0)

    def successors(self) -> dict:
        """Adjacency as ``{node: [neighbours]}``; both directions for undirected layers."""
        adj: dict = {v: [] for v in self.nodes}
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed:
                adj[v].append(u)
        return adj

    def subgraph(self, keep: Iterable[str]) -> "Layer":
        keep = frozenset(keep) & self.nodes
        edges = frozenset((u, v) for u, v in self.edges if u in keep and v in keep)
        return Layer(self.name, self.directed, keep, edges, self.self_loops_dropped)

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Layer({self.name!r}, {kind}, n={self.n}, m={self.m})"


def degree(layer: Layer, v: str, mode: DegreeMode | str = DegreeMode.TOTAL) -> int:
    """Number of edges incident to ``v`` in ``layer``.

    On directed layers ``mode`` picks in-, out- or total (in + out) degree;
    it has no effect on undirected layers.
    """
    if v not in layer.nodes:
        raise NodeNotInLayer(v, layer.name)
    mode = DegreeMode(mode)
    if not layer.directed or mode is DegreeMode.TOTAL:
        return layer.out_degree(v) + layer.in_degree(v)
    if mode is DegreeMode.IN:
        return layer.in_degree(v)
    return layer.out_degree(v)


def layer_degrees(layer: Layer, mode: DegreeMode | str = DegreeMode.TOTAL) -> dict:
    """Degrees of every node of the layer, as ``{label: degree}``."""
    return {v: degree(layer, v, mode) for v in layer.nodes}


def _intersect(layers: Sequence[Layer]) -> frozenset:
    if not layers:
        raise ValueError("a multiplex network needs at least one layer")
    common = set(layers[0].nodes)
    for layer in layers[1:]:
        common &= layer.nodes
    return frozenset(common)


@dataclass(frozen=True, eq=False)
class MultiplexNetwork:
    """Ordered layers plus the set of nodes common to all of them.

    ``labels`` is the sorted union of all node labels and ``index`` maps each
    label to its dense integer position in ``labels``.
    """

    layers: tuple
    common_nodes: frozenset = field(init=False)
    labels: tuple = field(init=False, repr=False)
    index: Mapping[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        layers = tuple(self.layers)
        names = [layer.name for layer in layers]
        if len(set(names)) != len(names):
            raise ValueError(f"layer names must be unique, got {names}")
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "common_nodes", _intersect(layers))
        union = set().union(*(layer.nodes for layer in layers))
        labels = tuple(sorted(union, key=node_sort_key))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "index", {label: i for i, label in enumerate(labels)})

    @property
    def layer_names(self) -> tuple:
        return tuple(layer.name for layer in self.layers)

    def layer(self, name: str) -> Layer:
        for layer in self.layers:
            if layer.name == name:
                return layer
        raise KeyError(f"no layer named {name!r}")

    def common_order(self) -> list:
        """Common nodes in deterministic (natural label) order."""
        return sorted(self.common_nodes, key=node_sort_key)

    def __len__(self):
        return len(self.layers)


def common_nodes(network: MultiplexNetwork) -> frozenset:
    """Exact intersection of the layers' node sets; may be empty."""
    return _intersect(network.layers)


@dataclass(frozen=True, eq=False)
class CentralityMatrix:
    """Raw degrees, one row per node of ``node_order`` and one column per layer."""

    node_order: tuple
    layer_names: tuple
    values: np.ndarray
    mode: DegreeMode = DegreeMode.TOTAL

    def column(self, layer: str | int) -> np.ndarray:
        j = self.layer_names.index(layer) if isinstance(layer, str) else layer
        return self.values[:, j]

    def row(self, node: str) -> np.ndarray:
        return self.values[self.node_order.index(node)]


def degree_matrix(
    network: MultiplexNetwork,
    nodes: Sequence[str] | None = None,
    mode: DegreeMode | str = DegreeMode.TOTAL,
) -> CentralityMatrix:
    """Degrees of ``nodes`` (default: the common nodes) in every layer."""
    mode = DegreeMode(mode)
    order = tuple(network.common_order() if nodes is None else nodes)
    values = np.zeros((len(order), len(network.layers)), dtype=np.int64)
    for j, layer in enumerate(network.layers):
        for i, v in enumerate(order):
            values[i, j] = degree(layer, v, mode)
    values.setflags(write=False)
    return CentralityMatrix(order, network.layer_names, values, mode)
