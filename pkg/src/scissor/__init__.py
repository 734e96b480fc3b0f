"""Training-free video token compression via semantic connected components.

Tokens are grouped by connected components of a thresholded cosine-similarity
graph (found approximately in near-linear time via sampled union-find), each
component is averaged into one representative, and the two-step spatial then
temporal pipeline plus a final nearest-neighbor merge turns an (n, m, d) video
token tensor into M << n*m tokens. A FLOPs cost model and a synthetic
benchmark harness round out the package.
"""

from .components import (
    ComponentPartition,
    SamplePlan,
    approx_components,
    exact_components,
    make_sample_plan,
    sample_size,
    sort_components,
)
from .cost import (
    FlopsReport,
    LlmCostConfig,
    OverheadConfig,
    ScenarioRow,
    compression_flops,
    llm_flops,
    scenario_table,
)
from .errors import (
    NonFiniteInputError,
    PartitionMismatchError,
    VtokFormatError,
    ZeroNormRowError,
)
from .harness import (
    COVERAGE_COSINE,
    SelectorRow,
    SweepCurve,
    SyntheticSpec,
    SyntheticVideo,
    TimingReport,
    TimingRow,
    compare_selectors,
    gen_synthetic_video,
    sweep_epsilon,
    sweep_tau,
    timing_scaling,
)
from .pipeline import (
    SELECTORS,
    CompressionResult,
    PipelineConfig,
    assign_sources,
    baseline_select,
    compress_video,
    final_merge,
    fit_tau,
    frame_seeds,
    spatial_step,
    temporal_step,
)
from .scc import DEFAULT_EPSILON, SccConfig, SccOutput, merge_partition, scc_compress
from .tokens import (
    VideoTokens,
    as_token_matrix,
    binary_adjacency,
    cosine_similarity,
    degrees,
)
from .unionfind import UnionFind
from .vtok import HEADER_SIZE, MAGIC, VERSION, read_vtok, write_vtok

__version__ = "0.1.0"

__all__ = [
    "COVERAGE_COSINE",
    "ComponentPartition",
    "CompressionResult",
    "DEFAULT_EPSILON",
    "FlopsReport",
    "HEADER_SIZE",
    "LlmCostConfig",
    "MAGIC",
    "NonFiniteInputError",
    "OverheadConfig",
    "PartitionMismatchError",
    "PipelineConfig",
    "SELECTORS",
    "SamplePlan",
    "ScenarioRow",
    "SccConfig",
    "SccOutput",
    "SelectorRow",
    "SweepCurve",
    "SyntheticSpec",
    "SyntheticVideo",
    "TimingReport",
    "TimingRow",
    "UnionFind",
    "VERSION",
    "VideoTokens",
    "VtokFormatError",
    "ZeroNormRowError",
    "approx_components",
    "as_token_matrix",
    "assign_sources",
    "baseline_select",
    "binary_adjacency",
    "compare_selectors",
    "compress_video",
    "compression_flops",
    "cosine_similarity",
    "degrees",
    "exact_components",
    "final_merge",
    "fit_tau",
    "frame_seeds",
    "gen_synthetic_video",
    "llm_flops",
    "make_sample_plan",
    "merge_partition",
    "read_vtok",
    "sample_size",
    "scc_compress",
    "scenario_table",
    "sort_components",
    "spatial_step",
    "sweep_epsilon",
    "sweep_tau",
    "temporal_step",
    "timing_scaling",
    "write_vtok",
]
