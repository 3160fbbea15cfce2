"""Maximum-entropy OWA weights and ordered weighted aggregation.

For ``n`` criteria and steering parameter ``beta`` the i-th weight (1-based)
is proportional to ``exp(beta * (n - i) / (n - 1))``. The weights are applied
to the criteria sorted in non-increasing order, so ``beta -> +inf`` yields the
maximum (pure OR), ``beta -> -inf`` the minimum (pure AND) and ``beta == 0``
the arithmetic mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ArityMismatch, InvalidArity

__all__ = [
    "WeightVector",
    "meowa_weights",
    "orness",
    "entropy",
    "aggregate",
    "aggregate_rows",
    "beta_grid",
    "parse_beta_grid",
    "weight_table",
    "DEFAULT_BETAS",
]


@dataclass(frozen=True, eq=False)
class WeightVector:
    beta: float
    weights: np.ndarray

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def orness(self) -> float:
        return orness(self)

    @property
    def entropy(self) -> float:
        return entropy(self)

    def __iter__(self):
        return iter(self.weights.tolist())

    def __len__(self):
        return self.n


def meowa_weights(beta: float, n: int) -> WeightVector:
    """Weight vector for ``n`` sorted criteria.

    The exponents are shifted by their maximum before exponentiating, which
    keeps large ``|beta|`` finite. ``beta = +/-inf`` returns the exact
    limiting vectors ``(1, 0, ..., 0)`` and ``(0, ..., 0, 1)``.
    """
    if int(n) != n or n < 2:
        raise InvalidArity(f"MEOWA needs at least 2 criteria, got n={n}")
    n = int(n)
    beta = float(beta)
    if math.isnan(beta):
        raise ValueError("beta must not be NaN")
    if math.isinf(beta):
        weights = np.zeros(n)
        weights[0 if beta > 0 else -1] = 1.0
    elif beta == 0:
        weights = np.full(n, 1.0 / n)
    else:
        exponents = beta * np.arange(n - 1, -1, -1, dtype=float) / (n - 1)
        shifted = np.exp(exponents - exponents.max())
        weights = shifted / shifted.sum()
    weights.setflags(write=False)
    return WeightVector(beta, weights)


def _as_array(weights) -> np.ndarray:
    if isinstance(weights, WeightVector):
        return weights.weights
    return np.asarray(weights, dtype=float)


def orness(weights) -> float:
    """Yager's orness: 1 for pure max, 0 for pure min, 0.5 for the mean."""
    w = _as_array(weights)
    n = len(w)
    if n < 2:
        raise InvalidArity(f"orness needs at least 2 weights, got {n}")
    return float(np.dot(np.arange(n - 1, -1, -1, dtype=float), w) / (n - 1))


def entropy(weights) -> float:
    """Shannon entropy of the weights in nats, with ``0 ln 0 = 0``."""
    w = _as_array(weights)
    positive = w[w > 0]
    return float(-np.sum(positive * np.log(positive)))


def aggregate(values: Sequence[float], weights: WeightVector | Sequence[float]) -> float:
    """Dot the non-increasingly sorted ``values`` with ``weights``."""
    w = _as_array(weights)
    v = np.asarray(values, dtype=float)
    if v.shape != w.shape:
        raise ArityMismatch(f"{v.size} values but {w.size} weights")
    return float(np.dot(np.sort(v)[::-1], w))


def aggregate_rows(values: np.ndarray, weight_vectors: Sequence[WeightVector]) -> np.ndarray:
    """Aggregate each row of ``values`` under each weight vector.

    Returns an array of shape ``(rows, len(weight_vectors))``.
    """
    values = np.asarray(values, dtype=float)
    if not weight_vectors:
        return np.zeros((values.shape[0], 0))
    w = np.stack([_as_array(wv) for wv in weight_vectors])
    if w.shape[1] != values.shape[1]:
        raise ArityMismatch(f"{values.shape[1]} values per row but {w.shape[1]} weights")
    ordered = -np.sort(-values, axis=1)
    return ordered @ w.T


def beta_grid(start: float = -20.0, stop: float = 20.0, step: float = 1.0) -> tuple[float, ...]:
    """Inclusive arithmetic grid from ``start`` to ``stop``."""
    if step <= 0:
        raise ValueError(f"beta step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"beta grid is empty: {start} > {stop}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    # integer multiples keep grid points exact (e.g. -20.0 ... 20.0)
    return tuple(float(round(start + k * step, 12)) for k in range(count))


def parse_beta_grid(text: str) -> tuple[float, ...]:
    """Parse ``MIN:MAX:STEP`` (step defaults to 1) or a comma-separated list."""
    text = text.strip()
    if ":" in text:
        parts = [float(p) for p in text.split(":")]
        if len(parts) == 2:
            parts.append(1.0)
        if len(parts) != 3:
            raise ValueError(f"beta grid must be MIN:MAX:STEP, got {text!r}")
        return beta_grid(*parts)
    betas = tuple(float(p) for p in text.split(",") if p.strip())
    if not betas:
        raise ValueError("beta grid is empty")
    return betas


def weight_table(betas: Iterable[float], n: int) -> list[WeightVector]:
    return [meowa_weights(beta, n) for beta in betas]


DEFAULT_BETAS = beta_grid(-20.0, 20.0, 1.0)
