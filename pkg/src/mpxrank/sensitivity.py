"""Ranking common nodes under every (normalization, beta) pair and measuring
how far each node's position moves.

Positions run from 1 (lowest aggregated score, least central) to ``|V*|``
(highest score, most central). Scores closer than ``TIE_TOLERANCE`` count as
tied, and a tie group takes its minimum position.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyCommonSet, InvalidArity, NodeNotInTable
from .graph import DegreeMode, MultiplexNetwork, node_sort_key
from .meowa import DEFAULT_BETAS, aggregate_rows, weight_table
from .normalize import ALL_METHODS, Method, normalize

log = logging.getLogger(__name__)

__all__ = [
    "TIE_TOLERANCE",
    "QUADRANTS",
    "RankingTable",
    "SensitivityRecord",
    "rank_nodes",
    "beta_sweep",
    "delta_agg",
    "delta_norm",
    "classify",
    "sensitivity_report",
]

# Absorbs last-bit rounding differences between mathematically equal scores.
TIE_TOLERANCE = 1e-12

QUADRANTS = ("A0N0", "A+N0", "A0N+", "A+N+")


def rank_nodes(scores: Sequence[float], tol: float = TIE_TOLERANCE) -> np.ndarray:
    """Ascending competition positions of ``scores``.

    Position of a node is one plus the number of nodes whose score is lower
    by more than ``tol``.

    >>> rank_nodes([0.1, 0.9, 0.5]).tolist()
    [1, 3, 2]
    """
    scores = np.asarray(scores, dtype=float)
    ordered = np.sort(scores)
    return np.searchsorted(ordered, scores - tol, side="left").astype(np.int64) + 1


@dataclass(frozen=True, eq=False)
class RankingTable:
    """Positions (and the scores behind them) of every common node.

    ``positions[i, m, b]`` is the position of ``node_order[i]`` under
    ``methods[m]`` at ``betas[b]``; ``scores`` has the same layout.
    """

    node_order: tuple
    methods: tuple
    betas: tuple
    positions: np.ndarray
    scores: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "_row", {v: i for i, v in enumerate(self.node_order)})

    def row_index(self, node: str) -> int:
        try:
            return self._row[node]
        except KeyError:
            raise NodeNotInTable(node) from None

    def node_positions(self, node: str) -> np.ndarray:
        """``(methods, betas)`` slice of positions for one node."""
        return self.positions[self.row_index(node)]

    def position(self, node: str, method, beta: float) -> int:
        m = self.methods.index(Method.parse(method) if not isinstance(method, Method) else method)
        b = self.betas.index(float(beta))
        return int(self.positions[self.row_index(node), m, b])

    def curve(self, node: str, method) -> list[tuple[float, int]]:
        """Position of ``node`` against beta for one method."""
        method = Method.parse(method) if not isinstance(method, Method) else method
        row = self.node_positions(node)[self.methods.index(method)]
        return list(zip(self.betas, row.tolist()))

    def restrict(self, methods: Iterable | None = None, betas: Iterable[float] | None = None) -> "RankingTable":
        """Sub-table on a subset of methods and/or betas (positions are kept, not re-ranked)."""
        m_idx = list(range(len(self.methods))) if methods is None else [
            self.methods.index(m if isinstance(m, Method) else Method.parse(m)) for m in methods
        ]
        b_idx = list(range(len(self.betas))) if betas is None else [self.betas.index(float(b)) for b in betas]
        return RankingTable(
            self.node_order,
            tuple(self.methods[i] for i in m_idx),
            tuple(self.betas[i] for i in b_idx),
            self.positions[:, m_idx][:, :, b_idx],
            self.scores[:, m_idx][:, :, b_idx],
        )

    def __len__(self):
        return len(self.node_order)


def beta_sweep(
    network: MultiplexNetwork,
    methods: Sequence = ALL_METHODS,
    betas: Sequence[float] = DEFAULT_BETAS,
    mode: DegreeMode | str = DegreeMode.TOTAL,
) -> RankingTable:
    """Normalize with each method, aggregate at each beta, rank the common nodes."""
    nodes = tuple(network.common_order())
    if len(nodes) < 2:
        raise EmptyCommonSet(f"need at least 2 common nodes to rank, found {len(nodes)}")
    if len(network.layers) < 2:
        raise InvalidArity("need at least 2 layers to aggregate")
    methods = tuple(m if isinstance(m, Method) else Method.parse(m) for m in methods)
    betas = tuple(float(b) for b in betas)
    if not methods or not betas:
        raise ValueError("need at least one method and one beta")
    weights = weight_table(betas, len(network.layers))
    scores = np.empty((len(nodes), len(methods), len(betas)))
    positions = np.empty(scores.shape, dtype=np.int64)
    for m, method in enumerate(methods):
        values = normalize(network, method, mode, nodes).values
        scores[:, m, :] = aggregate_rows(values, weights)
        for b in range(len(betas)):
            positions[:, m, b] = rank_nodes(scores[:, m, b])
    scores.setflags(write=False)
    positions.setflags(write=False)
    log.debug("ranked %d nodes under %d methods x %d betas", len(nodes), len(methods), len(betas))
    return RankingTable(nodes, methods, betas, positions, scores)


def delta_agg(table: RankingTable, v: str) -> int:
    """Largest position spread across betas, taken over methods."""
    rows = table.node_positions(v)
    return int((rows.max(axis=1) - rows.min(axis=1)).max())


def delta_norm(table: RankingTable, v: str) -> int:
    """Largest position spread across methods, taken over betas."""
    rows = table.node_positions(v)
    return int((rows.max(axis=0) - rows.min(axis=0)).max())


def classify(d_agg: int, d_norm: int, tau_agg: int = 2, tau_norm: int = 2) -> str:
    """Quadrant label; a sign is ``+`` when its delta exceeds the threshold."""
    if d_agg < 0 or d_norm < 0:
        raise ValueError("deltas must be non-negative")
    a = "+" if d_agg > tau_agg else "0"
    n = "+" if d_norm > tau_norm else "0"
    return f"A{a}N{n}"


@dataclass(frozen=True)
class SensitivityRecord:
    node: str
    delta_agg: int
    delta_norm: int
    quadrant: str


def sensitivity_report(table: RankingTable, tau_agg: int = 2, tau_norm: int = 2) -> list[SensitivityRecord]:
    """One record per node, most sensitive first (ties by label)."""
    records = []
    for v in table.node_order:
        da, dn = delta_agg(table, v), delta_norm(table, v)
        records.append(SensitivityRecord(v, da, dn, classify(da, dn, tau_agg, tau_norm)))
    records.sort(key=lambda r: (-(r.delta_agg + r.delta_norm), node_sort_key(r.node)))
    return records
