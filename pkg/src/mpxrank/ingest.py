"""Reading multiplex edge lists, per-layer preprocessing and network assembly.

Three text formats are understood:

* per-layer edge lists -- ``src dst [extra ...]`` per line;
* the combined format -- ``layer src dst [weight]`` per line;
* a layer manifest -- ``name<TAB>path<TAB>directed|undirected<TAB>none|largest_scc``
  with an optional fifth column selecting one layer id of a combined file.

Lines starting with ``#`` or ``%`` are comments. Extra columns (weights,
timestamps) are ignored.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import EmptyLayer, ParseError
from .graph import Layer, MultiplexNetwork

log = logging.getLogger(__name__)

__all__ = [
    "LayerSpec",
    "LayerManifest",
    "parse_edge_list",
    "parse_combined",
    "write_edge_list",
    "strongly_connected_components",
    "connected_components",
    "largest_scc",
    "build_network",
    "read_manifest",
]

PREPROCESS = ("none", "largest_scc")
COMMENT_PREFIXES = ("#", "%")


def _records(path: Path, min_tokens: int) -> Iterator[tuple[int, list[str]]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith(COMMENT_PREFIXES):
                continue
            tokens = stripped.split()
            if len(tokens) < min_tokens:
                raise ParseError(
                    f"expected at least {min_tokens} fields, got {len(tokens)}: {stripped!r}",
                    path, lineno,
                )
            yield lineno, tokens


def _log_loops(layer: Layer, path) -> None:
    if layer.self_loops_dropped:
        log.warning("%s: dropped %d self-loop(s) in layer %r", path, layer.self_loops_dropped, layer.name)


def parse_edge_list(path, directed: bool = False, name: str | None = None) -> Layer:
    """Read one layer from a ``src dst [extra ...]`` edge-list file."""
    path = Path(path)
    edges = [(tokens[0], tokens[1]) for _, tokens in _records(path, 2)]
    layer = Layer.from_edges(name or path.stem, edges, directed)
    _log_loops(layer, path)
    return layer


def parse_combined(path, directed=False, layers: Sequence[str] | None = None) -> list[Layer]:
    """Read every layer of a ``layer src dst [weight]`` file.

    ``directed`` is a bool applied to all layers or a mapping from layer id
    to bool. Layers are returned in order of first appearance unless
    ``layers`` restricts and orders them.
    """
    path = Path(path)
    grouped: dict[str, list] = {}
    for _, tokens in _records(path, 3):
        grouped.setdefault(tokens[0], []).append((tokens[1], tokens[2]))
    ids = list(grouped) if layers is None else [str(x) for x in layers]
    result = []
    for layer_id in ids:
        if layer_id not in grouped:
            raise ParseError(f"layer id {layer_id!r} does not occur in the file", path)
        is_directed = directed.get(layer_id, False) if isinstance(directed, dict) else bool(directed)
        layer = Layer.from_edges(layer_id, grouped[layer_id], is_directed)
        _log_loops(layer, path)
        result.append(layer)
    return result


def write_edge_list(layer: Layer, path) -> None:
    """Write the canonical edge-list form: one sorted ``src dst`` line per edge."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        kind = "directed" if layer.directed else "undirected"
        fh.write(f"# {layer.name} ({kind}) n={layer.n} m={layer.m}\n")
        for u, v in sorted(layer.edges):
            fh.write(f"{u} {v}\n")


def strongly_connected_components(layer: Layer) -> list[frozenset]:
    """Tarjan's algorithm, iterative so that large layers do not hit the recursion limit."""
    adj = layer.successors()
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    components = []
    counter = 0
    for root in sorted(adj):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(adj[root]))]
        while work:
            v, neighbours = work[-1]
            advanced = False
            for w in neighbours:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                members = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    members.add(w)
                    if w == v:
                        break
                components.append(frozenset(members))
    return components


def connected_components(layer: Layer) -> list[frozenset]:
    """Components of the layer with edge directions ignored."""
    adj: dict = {v: set() for v in layer.nodes}
    for u, v in layer.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen: set = set()
    components = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen.add(start)
        frontier = [start]
        members = {start}
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    members.add(w)
                    frontier.append(w)
        components.append(frozenset(members))
    return components


def largest_scc(layer: Layer) -> Layer:
    """Induced subgraph on the largest strongly connected component.

    Equal-size components are resolved in favour of the one holding the
    lexicographically smallest label. Undirected layers use their largest
    connected component instead.
    """
    if not layer.nodes:
        raise EmptyLayer(f"layer {layer.name!r} has no nodes")
    if layer.directed:
        components = strongly_connected_components(layer)
    else:
        log.info("layer %r is undirected; using its largest connected component", layer.name)
        components = connected_components(layer)
    best = min(components, key=lambda c: (-len(c), min(c)))
    return layer.subgraph(best)


@dataclass(frozen=True)
class LayerSpec:
    name: str
    path: Path
    directed: bool = False
    preprocess: str = "none"
    layer_id: str | None = None

    def __post_init__(self):
        if self.preprocess not in PREPROCESS:
            raise ValueError(f"preprocess must be one of {PREPROCESS}, got {self.preprocess!r}")


@dataclass(frozen=True)
class LayerManifest:
    """Layer descriptors in network order.

    A ``LayerSpec`` with ``layer_id`` set reads that layer of a combined
    file; several specs may share one combined file this way.
    """

    layers: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        names = [spec.name for spec in self.layers]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate layer names in manifest: {names}")
        seen = set()
        for spec in self.layers:
            key = (Path(spec.path).resolve(), spec.layer_id)
            if key in seen:
                raise ValueError(f"layer source {spec.path} listed twice without distinct layer ids")
            seen.add(key)

    @classmethod
    def combined(cls, path, directed=False, preprocess="none", layer_ids: Iterable[str] | None = None):
        """Manifest covering every layer (or ``layer_ids``) of one combined file."""
        path = Path(path)
        if layer_ids is None:
            layer_ids = list(dict.fromkeys(tokens[0] for _, tokens in _records(path, 3)))
        specs = []
        for layer_id in layer_ids:
            is_directed = directed.get(layer_id, False) if isinstance(directed, dict) else bool(directed)
            specs.append(LayerSpec(str(layer_id), path, is_directed, preprocess, str(layer_id)))
        return cls(tuple(specs))


def read_manifest(path) -> LayerManifest:
    """Parse a tab-separated manifest file; relative paths resolve against its directory."""
    path = Path(path)
    base = path.parent
    specs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            fields = [f.strip() for f in line.rstrip("\r\n").split("\t")]
            if len(fields) not in (4, 5):
                raise ParseError(f"expected 4 or 5 tab-separated fields, got {len(fields)}", path, lineno)
            name, layer_path, kind, preprocess = fields[:4]
            if kind not in ("directed", "undirected"):
                raise ParseError(f"direction must be 'directed' or 'undirected', got {kind!r}", path, lineno)
            if preprocess not in PREPROCESS:
                raise ParseError(f"preprocess must be one of {PREPROCESS}, got {preprocess!r}", path, lineno)
            layer_path = Path(os.path.expanduser(layer_path))
            if not layer_path.is_absolute():
                layer_path = base / layer_path
            layer_id = fields[4] if len(fields) == 5 and fields[4] else None
            specs.append(LayerSpec(name, layer_path, kind == "directed", preprocess, layer_id))
    try:
        return LayerManifest(tuple(specs))
    except ValueError as exc:
        raise ParseError(str(exc), path) from exc


def _load_layer(spec: LayerSpec, combined_cache: dict) -> Layer:
    if spec.layer_id is None:
        layer = parse_edge_list(spec.path, spec.directed, name=spec.name)
    else:
        key = Path(spec.path).resolve()
        if key not in combined_cache:
            grouped: dict = {}
            for _, tokens in _records(spec.path, 3):
                grouped.setdefault(tokens[0], []).append((tokens[1], tokens[2]))
            combined_cache[key] = grouped
        grouped = combined_cache[key]
        if spec.layer_id not in grouped:
            raise ParseError(f"layer id {spec.layer_id!r} does not occur in the file", spec.path)
        layer = Layer.from_edges(spec.name, grouped[spec.layer_id], spec.directed)
        _log_loops(layer, spec.path)
    if spec.preprocess == "largest_scc":
        before = layer.n
        layer = largest_scc(layer)
        log.info("layer %r: largest component keeps %d of %d nodes", spec.name, layer.n, before)
    return layer


def build_network(manifest: LayerManifest | str | os.PathLike) -> MultiplexNetwork:
    """Parse, preprocess and assemble every layer of ``manifest`` in order."""
    if not isinstance(manifest, LayerManifest):
        manifest = read_manifest(manifest)
    if not manifest.layers:
        raise ValueError("manifest lists no layers")
    cache: dict = {}
    layers = [_load_layer(spec, cache) for spec in manifest.layers]
    network = MultiplexNetwork(tuple(layers))
    if not network.common_nodes:
        log.warning("no node is common to all %d layers", len(layers))
    else:
        log.info("%d layers, %d common nodes", len(layers), len(network.common_nodes))
    return network
