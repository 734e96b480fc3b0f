"""Command-line surface.

Subcommands: compress (run the pipeline on a VTOK file), sweep (threshold or
tolerance curves as CSV), flops (cost model report), gen (synthetic fixture
generator). Machine-readable output goes to standard output, logs to standard
error. Exit codes: 0 success, 2 malformed or unreadable file, 3 invalid
parameters. SCISSOR_SEED provides the default seed when --seed is absent.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .cost import FlopsReport, LlmCostConfig, OverheadConfig, compression_flops, llm_flops
from .errors import VtokFormatError
from .harness import SyntheticSpec, gen_synthetic_video, sweep_epsilon, sweep_tau
from .pipeline import SELECTORS, CompressionResult, PipelineConfig, compress_video, fit_tau
from .tokens import VideoTokens
from .vtok import read_vtok, write_vtok


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; our contract reserves 2 for
    # malformed files, so route usage problems through exit code 3 instead
    def error(self, message):
        raise _UsageError(message)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _resolve_seed(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("SCISSOR_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"SCISSOR_SEED must be an integer, got {env!r}") from None


def _add_seed_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: $SCISSOR_SEED or 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scissor", description="Video token compression toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", parents=[], help="compress a VTOK token file")
    p.add_argument("in_path")
    p.add_argument("out_path")
    p.add_argument("--tau", type=float, default=None, help="similarity threshold in [0, 1)")
    p.add_argument("--tau-temporal", type=float, default=None,
                   help="separate threshold for the temporal step (default: --tau)")
    p.add_argument("--epsilon", type=float, default=0.05, help="sampling tolerance (default 0.05)")
    p.add_argument("--no-temporal", action="store_true", help="skip the temporal step")
    p.add_argument("--no-merge", action="store_true", help="skip the final source merge")
    p.add_argument("--selector", choices=SELECTORS, default="scc",
                   help="token selection strategy (default scc)")
    p.add_argument("--target-count", type=int, default=None,
                   help="retained count for non-scc selectors")
    p.add_argument("--target-ratio", type=float, default=None,
                   help="fit tau by bisection to hit this retention ratio instead of --tau")
    _add_seed_flag(p)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("sweep", help="retained-count curves over tau or epsilon, as CSV")
    p.add_argument("in_path")
    p.add_argument("--tau-list", default=None, help="comma-separated thresholds")
    p.add_argument("--epsilon-list", default=None, help="comma-separated tolerances")
    p.add_argument("--tau", type=float, default=0.8, help="threshold for epsilon sweeps")
    p.add_argument("--epsilon", type=float, default=0.05, help="tolerance for tau sweeps")
    p.add_argument("--runs", type=int, default=5, help="seeds per point (default 5)")
    _add_seed_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("flops", help="LLM + compression FLOPs report as JSON")
    p.add_argument("--layers", type=int, required=True)
    p.add_argument("--hidden", type=int, required=True)
    p.add_argument("--ffn", type=int, required=True)
    p.add_argument("--tokens", type=int, required=True)
    p.add_argument("--decode-len", type=int, default=100)
    p.add_argument("--overhead", default=None, metavar="N,M,D,K1,K2",
                   help="include compression overhead for this workload shape")
    p.set_defaults(func=cmd_flops)

    p = sub.add_parser("gen", help="generate a planted-cluster VTOK fixture")
    p.add_argument("out_path")
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--tokens", type=int, required=True)
    p.add_argument("--dims", type=int, required=True)
    p.add_argument("--clusters", type=int, required=True)
    p.add_argument("--sigma", type=float, default=0.0, help="token noise level (default 0)")
    p.add_argument("--drift", type=float, default=0.0, help="per-frame centroid drift (default 0)")
    _add_seed_flag(p)
    p.set_defaults(func=cmd_gen)

    return parser


def _overhead_flops(video: VideoTokens, result: CompressionResult, cfg: PipelineConfig) -> float:
    """FLOPs actually spent by the chosen configuration.

    Baseline selectors build no similarity matrices; disabling the temporal
    step drops its matrix; disabling the merge drops the assignment scan.
    """
    n, m, d = video.n_frames, video.tokens_per_frame, video.dims
    total = 0.0
    if cfg.selector == "scc":
        total += n * 2.0 * m * m * d
        if cfg.enable_temporal:
            k1 = float(sum(result.spatial_counts))
            total += 2.0 * k1 * k1 * d
    if cfg.enable_final_merge:
        total += 2.0 * n * m * result.temporal_count * d
    return total


def cmd_compress(args) -> int:
    seed = _resolve_seed(args.seed)
    if (args.tau is None) == (args.target_ratio is None):
        raise ValueError("exactly one of --tau or --target-ratio is required")
    if args.target_ratio is not None and args.selector != "scc":
        raise ValueError("--target-ratio only applies to the scc selector")
    if args.target_ratio is not None and args.tau_temporal is not None:
        raise ValueError("--tau-temporal cannot be combined with --target-ratio")
    if args.target_count is not None and args.selector == "scc":
        raise ValueError("--target-count only applies to non-scc selectors")

    video = read_vtok(args.in_path)
    _log(f"read {video.n_frames}x{video.tokens_per_frame}x{video.dims} tokens from {args.in_path}")

    tau0 = args.tau if args.tau is not None else 0.5  # placeholder when bisecting
    cfg = PipelineConfig.from_params(
        tau=tau0,
        epsilon=args.epsilon,
        seed=seed,
        tau_temporal=args.tau_temporal,
        enable_temporal=not args.no_temporal,
        enable_final_merge=not args.no_merge,
        selector=args.selector,
        target_count=args.target_count,
    )

    start = time.perf_counter()
    if args.target_ratio is not None:
        tau_fit, result = fit_tau(video, args.target_ratio, cfg)
        tau_spatial = tau_temporal = tau_fit
        _log(f"bisection settled on tau={tau_fit:.6f} "
             f"(achieved ratio {result.retention_ratio:.4f})")
    else:
        result = compress_video(video, cfg)
        tau_spatial = cfg.spatial.tau
        tau_temporal = cfg.temporal.tau
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    write_vtok(args.out_path, result.final.reshape(1, result.temporal_count, video.dims))
    _log(f"wrote {result.temporal_count} tokens to {args.out_path}")

    stats = {
        "input_tokens": result.input_count,
        "retained_tokens": result.temporal_count,
        "retention_ratio": result.retention_ratio,
        "tau_spatial": tau_spatial,
        "tau_temporal": tau_temporal,
        "epsilon": args.epsilon,
        "seed": seed,
        "spatial_counts": result.spatial_counts,
        "flops_overhead": _overhead_flops(video, result, cfg),
        "elapsed_ms": elapsed_ms,
    }
    print(json.dumps(stats, indent=2))
    return 0


def _parse_float_list(text: str, flag: str) -> list[float]:
    values = [float(v) for v in text.split(",") if v.strip()]
    if not values:
        raise ValueError(f"{flag} is empty")
    return values


def cmd_sweep(args) -> int:
    seed = _resolve_seed(args.seed)
    if (args.tau_list is None) == (args.epsilon_list is None):
        raise ValueError("exactly one of --tau-list or --epsilon-list is required")
    if args.runs < 1:
        raise ValueError("--runs must be >= 1")

    video = read_vtok(args.in_path)
    if args.tau_list is not None:
        values = _parse_float_list(args.tau_list, "--tau-list")
        curve = sweep_tau(video, values, epsilon=args.epsilon, runs=args.runs, seed=seed)
    else:
        values = _parse_float_list(args.epsilon_list, "--epsilon-list")
        curve = sweep_epsilon(video, args.tau, values, runs=args.runs, seed=seed)
        _log(f"full-sampling floor: {curve.floor_count} tokens")

    print("param,mean_count,std_count,runs")
    for v, mean, std in zip(curve.values, curve.mean_counts, curve.std_counts):
        print(f"{v},{mean},{std},{curve.runs}")
    return 0


def cmd_flops(args) -> int:
    for name in ("layers", "hidden", "ffn", "tokens", "decode_len"):
        if getattr(args, name) < 1:
            raise ValueError(f"--{name.replace('_', '-')} must be >= 1")
    report = llm_flops(
        LlmCostConfig(layers=args.layers, hidden=args.hidden, ffn=args.ffn,
                      tokens=args.tokens, decode_len=args.decode_len)
    )
    if args.overhead is not None:
        parts = [int(v) for v in args.overhead.split(",")]
        if len(parts) != 5:
            raise ValueError("--overhead expects five integers: n,m,d,k1,k2")
        ovh = OverheadConfig(frames=parts[0], per_frame=parts[1], hidden=parts[2],
                             k1=parts[3], k2=parts[4])
        report = report.with_overhead(compression_flops(ovh))
    print(json.dumps(
        {"prefill": report.prefill, "decode": report.decode,
         "overhead": report.overhead, "total": report.total},
        indent=2,
    ))
    return 0


def cmd_gen(args) -> int:
    seed = _resolve_seed(args.seed)
    spec = SyntheticSpec(
        n_frames=args.frames,
        tokens_per_frame=args.tokens,
        dims=args.dims,
        n_clusters=args.clusters,
        noise_sigma=args.sigma,
        temporal_drift=args.drift,
        seed=seed,
    )
    fixture = gen_synthetic_video(spec)
    write_vtok(args.out_path, fixture.video)
    sidecar = f"{args.out_path}.labels.json"
    with open(sidecar, "w", encoding="utf-8") as fh:
        json.dump(
            {
                "n_frames": spec.n_frames,
                "tokens_per_frame": spec.tokens_per_frame,
                "dims": spec.dims,
                "n_clusters": spec.n_clusters,
                "noise_sigma": spec.noise_sigma,
                "temporal_drift": spec.temporal_drift,
                "seed": spec.seed,
                "margin": fixture.margin,
                "labels": fixture.labels.tolist(),
            },
            fh,
            indent=2,
        )
        fh.write("\n")
    _log(f"wrote fixture to {args.out_path} (margin {fixture.margin:.4f}), labels to {sidecar}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except VtokFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
