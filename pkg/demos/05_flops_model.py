#!/usr/bin/env python3
"""What token compression buys at inference time, in FLOPs.

A 28-layer, 3584-hidden, 18944-ffn transformer reading a video prompt of
6272 visual tokens and generating 100 tokens. We shrink the prompt to a few
retention ratios and price each scenario, once ignoring the compressor's own
arithmetic and once charging for it.
"""

from scissor import LlmCostConfig, OverheadConfig, llm_flops, scenario_table

base = LlmCostConfig(layers=28, hidden=3584, ffn=18944, tokens=6272)
full = llm_flops(base)
print(f"uncompressed prompt: prefill {full.prefill/1e12:6.2f} TFLOPs, "
      f"decode {full.decode/1e12:5.2f} TFLOPs, total {full.total/1e12:6.2f} TFLOPs\n")

# the prompt is 32 frames x 196 tokens; k1 is what the spatial step keeps
ratios = [1.0, 0.5, 0.35, 0.25, 0.1, 0.05]
overheads = [
    OverheadConfig(
        frames=32,
        per_frame=196,
        hidden=3584,
        k1=min(32 * 196, 2 * round(r * 6272)),  # spatial step keeps ~2x the final count
        k2=round(r * 6272),
    )
    for r in ratios
]

print(f"{'ratio':>6} | {'tokens':>6} | {'LLM total':>10} | {'overhead':>9} | "
      f"{'rel.':>6} | rel. w/o overhead")
for row in scenario_table(base, ratios, overheads):
    print(f"{row.ratio:6.2f} | {row.tokens:6d} | {row.llm/1e12:8.2f} T | "
          f"{row.overhead/1e12:7.3f} T | {row.flops_ratio:6.3f} | "
          f"{row.flops_ratio_no_overhead:.3f}")

print("\nthe compressor costs a fraction of a TFLOP while the prompt-size")
print("reduction saves tens: overhead barely moves the relative cost")
