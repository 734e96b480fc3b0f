"""FLOPs cost model for LLM inference plus the compression overhead.

The LLM side splits into prefill (all k prompt tokens processed at once) and
decode (R autoregressive steps against a KV cache). The compression side
counts the similarity matrices built by the spatial step, the temporal step,
and the final source-to-retained assignment. Everything is plain 64-bit float
arithmetic; no hardware model.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class LlmCostConfig:
    """Transformer shape: layer count, hidden size d, FFN intermediate size c,
    prompt token count k, and decode length R."""

    layers: int
    hidden: int
    ffn: int
    tokens: int
    decode_len: int = 100

    def __post_init__(self):
        for name in ("layers", "hidden", "ffn", "decode_len"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        # tokens = 0 is allowed as the zero-prompt limit of the formula
        if self.tokens < 0:
            raise ValueError(f"tokens must be >= 0, got {self.tokens}")


@dataclass(frozen=True)
class OverheadConfig:
    """Compression workload shape: n frames of m tokens with hidden size d,
    k1 tokens surviving the spatial step and k2 the temporal step."""

    frames: int
    per_frame: int
    hidden: int
    k1: int
    k2: int

    def __post_init__(self):
        for name in ("frames", "per_frame", "hidden", "k1", "k2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.k1 > self.frames * self.per_frame:
            raise ValueError(f"k1 ({self.k1}) exceeds total tokens ({self.frames * self.per_frame})")
        if self.k2 > self.k1:
            raise ValueError(f"k2 ({self.k2}) exceeds k1 ({self.k1})")


@dataclass(frozen=True)
class FlopsReport:
    prefill: float
    decode: float
    overhead: float = 0.0

    @property
    def total(self) -> float:
        return self.prefill + self.decode + self.overhead

    def with_overhead(self, overhead: float) -> "FlopsReport":
        return replace(self, overhead=float(overhead))


def llm_flops(cfg: LlmCostConfig) -> FlopsReport:
    """Prefill + decode FLOPs for one forward pass plus R generated tokens.

    Per layer, prefill costs 4kd^2 (QKVO projections) + 2k^2 d (pairwise
    attention) + 2kdc (feed-forward). Each decode step pays the single-token
    projection and feed-forward cost 4d^2 + 2dc, plus attention against the
    cached prompt (2dk) and the generated prefix, which averages (R+1)/2
    tokens over the R steps.
    """
    layers = float(cfg.layers)
    d = float(cfg.hidden)
    c = float(cfg.ffn)
    k = float(cfg.tokens)
    r = float(cfg.decode_len)
    prefill = layers * (4.0 * k * d * d + 2.0 * k * k * d + 2.0 * k * d * c)
    decode = layers * r * ((4.0 * d * d + 2.0 * d * c) + 2.0 * (d * k + d * (r + 1.0) / 2.0))
    return FlopsReport(prefill=prefill, decode=decode)


def compression_flops(cfg: OverheadConfig) -> float:
    """FLOPs spent by the compressor itself.

    n frames each build an m x m similarity matrix (2m^2 d), the temporal step
    builds a k1 x k1 matrix (2 k1^2 d), and the final assignment compares all
    n*m source tokens against the k2 retained ones (2 n m k2 d).
    """
    n = float(cfg.frames)
    m = float(cfg.per_frame)
    d = float(cfg.hidden)
    k1 = float(cfg.k1)
    k2 = float(cfg.k2)
    return n * 2.0 * m * m * d + 2.0 * k1 * k1 * d + 2.0 * n * m * k2 * d


@dataclass(frozen=True)
class ScenarioRow:
    """One retention setting: LLM cost at the reduced token count, compressor
    overhead, and both totals relative to the uncompressed baseline."""

    ratio: float
    tokens: int
    llm: float
    overhead: float
    total: float
    flops_ratio: float
    flops_ratio_no_overhead: float


def scenario_table(
    base: LlmCostConfig,
    retention_ratios: list[float],
    overhead_per_ratio: list[OverheadConfig | None] | None = None,
) -> list[ScenarioRow]:
    """LLM + overhead FLOPs at each retention ratio, relative to ratio 1.0.

    The baseline denominator is the LLM cost at base.tokens with no overhead.
    Overhead configs align one-to-one with the ratios; None means zero
    overhead for that row. Whether published per-method figures fold in each
    method's own overhead is ambiguous, so both totals are reported.
    """
    if overhead_per_ratio is None:
        overhead_per_ratio = [None] * len(retention_ratios)
    if len(overhead_per_ratio) != len(retention_ratios):
        raise ValueError(
            f"{len(retention_ratios)} ratios but {len(overhead_per_ratio)} overhead configs"
        )
    baseline = llm_flops(base).total
    rows = []
    for ratio, ovh_cfg in zip(retention_ratios, overhead_per_ratio):
        if not 0.0 < ratio <= 1.0:
            raise ValueError(f"retention ratio must be in (0, 1], got {ratio}")
        k_r = round(ratio * base.tokens)
        llm = llm_flops(replace(base, tokens=k_r)).total
        overhead = compression_flops(ovh_cfg) if ovh_cfg is not None else 0.0
        rows.append(
            ScenarioRow(
                ratio=ratio,
                tokens=k_r,
                llm=llm,
                overhead=overhead,
                total=llm + overhead,
                flops_ratio=(llm + overhead) / baseline,
                flops_ratio_no_overhead=llm / baseline,
            )
        )
    return rows
