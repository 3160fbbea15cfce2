"""Degree-centrality rankings in multiplex networks and their sensitivity to
normalization and aggregation choices."""

from .errors import (
    ArityMismatch,
    EmptyCommonSet,
    EmptyLayer,
    InvalidArity,
    MultiplexError,
    NodeNotInLayer,
    NodeNotInTable,
    ParseError,
)
from .graph import (
    CentralityMatrix,
    DegreeMode,
    Layer,
    MultiplexNetwork,
    common_nodes,
    degree,
    degree_matrix,
    layer_degrees,
)
from .ingest import (
    LayerManifest,
    LayerSpec,
    build_network,
    largest_scc,
    parse_combined,
    parse_edge_list,
    read_manifest,
    write_edge_list,
)
from .meowa import WeightVector, aggregate, beta_grid, entropy, meowa_weights, orness
from .normalize import (
    Method,
    NormalizedMatrix,
    cumulative_distribution,
    norm_method1,
    norm_method2,
    norm_method3,
    norm_method4,
    normalize,
)
from .sensitivity import (
    RankingTable,
    SensitivityRecord,
    beta_sweep,
    classify,
    delta_agg,
    delta_norm,
    rank_nodes,
    sensitivity_report,
)

__version__ = "0.1.0"
