"""RSK Lab - shape stability of the RSK correspondence.

Entry point: ``python -m src.main <command> ...``
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console

from . import __version__
from .constructions import build_general, build_t1, construction_decompositions, largest_odd_k
from .core.config import Config
from .core.exceptions import (
    ConfigError,
    DomainError,
    ResourceRefusal,
    RSKLabError,
    ValidationError,
    VerificationFailure,
)
from .core.logger import configure_logging, get_logger
from .greene import greene_profile, max_union_increasing
from .metrics import Side, adjacent_distance, anatomy, decompose_blocks, delta
from .report import ResultRecord, print_result, render_diagram, tableau_panel, to_csv, to_jsonl
from .search import (
    SweepTrial,
    exhaustive_t1,
    general_transposition_sweep,
    random_walk_sweep,
    run_suite,
)
from .seqlemma import (
    check_bound,
    continuous_optimum,
    kkt_residuals,
    minimize_ratio,
    reduce_pair,
    sequence_stats,
    tight_sequence,
    tightness_ratio,
)
from .tableaux import Partition, Permutation, rsk, shape

logger = get_logger("cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY = 2
EXIT_REFUSED = 3

Outcome = Tuple[Dict[str, Any], Any]


def cmd_rsk(args, config: Config) -> Outcome:
    """P, Q and shape of a permutation."""
    pair = rsk(Permutation.parse(args.perm))
    return pair.to_dict(), tableau_panel(pair)


def cmd_delta(args, config: Config) -> Outcome:
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu)
    return {"delta": delta(lam, mu)}, None


def cmd_distance(args, config: Config) -> Outcome:
    pi, tau = Permutation.parse(args.pi), Permutation.parse(args.tau)
    return {"distance": adjacent_distance(pi, tau, args.side), "side": args.side}, None


def cmd_construct(args, config: Config) -> Outcome:
    """Extremal pair at distance t, optionally with its monotone decompositions."""
    g = build_general(args.n, args.t)
    lam, mu = shape(g.pi), shape(g.tau)
    outputs = {
        **g.to_dict(),
        "lambda": lam.to_list(),
        "mu": mu.to_list(),
        "delta": delta(lam, mu),
        "distance": adjacent_distance(g.pi, g.tau),
    }
    if args.emit_witness:
        if args.t != 1 or g.k < 3:
            raise DomainError("witness decompositions are emitted for t = 1 and n >= 8 only")
        core = build_t1(largest_odd_k(args.n))
        outputs["witness"] = {"n0": core.n0, **construction_decompositions(core.k).to_dict()}
    return outputs, None


def cmd_blocks(args, config: Config) -> Outcome:
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu)
    blocks = decompose_blocks(lam, mu)
    return {"delta": delta(lam, mu), "blocks": [b.to_dict() for b in blocks]}, None


def cmd_greene(args, config: Config) -> Outcome:
    pi = Permutation.parse(args.perm)
    profile = greene_profile(pi)
    outputs = profile.to_dict()
    if args.j is not None:
        outputs["j"] = args.j
        outputs["mu_j"] = max_union_increasing(pi, args.j)
    return outputs, None


def cmd_search(args, config: Config) -> Tuple[Dict[str, Any], Any, Optional[List[SweepTrial]]]:
    if args.mode == "exhaustive":
        if args.t != 1:
            raise DomainError("exhaustive mode covers t = 1 only")
        result = exhaustive_t1(
            args.n,
            args.side,
            workers=config.search.workers,
            prune=config.search.prune_symmetry,
            max_n=config.search.max_exhaustive_n,
        )
        return result.to_dict(), None, None
    report = random_walk_sweep(
        args.n,
        args.t,
        config.search.trials,
        side=args.side,
        seed=config.search.seed,
        workers=config.search.workers,
    )
    return report.to_dict(), None, report.trials


def cmd_sweep_general(args, config: Config) -> Tuple[Dict[str, Any], Any, Optional[List[SweepTrial]]]:
    report = general_transposition_sweep(
        args.n,
        args.t,
        config.search.trials,
        seed=config.search.seed,
        side=args.side,
        workers=config.search.workers,
    )
    return report.to_dict(), None, report.trials


def cmd_seqlemma(args, config: Config) -> Outcome:
    if args.mode == "enumerate":
        pair, stats = minimize_ratio(
            args.k, args.T, max_k=config.sequences.max_k, max_T=config.sequences.max_T
        )
        return {"minimizer": pair.to_dict(), "stats": stats.to_dict(), "bound": check_bound(pair).to_dict()}, None
    if args.mode == "tight":
        pair = tight_sequence(args.k)
        return {
            "pair": pair.to_dict(),
            "stats": sequence_stats(pair).to_dict(),
            "bound": check_bound(pair).to_dict(),
            "tightness": tightness_ratio(pair),
        }, None
    opt = continuous_optimum(args.k, args.ell1, args.ell2, args.c)
    residuals = kkt_residuals(opt)
    return {
        "optimum": opt.to_dict(),
        "residuals": residuals,
        "max_residual": float(max(residuals)),
        "tolerance": config.sequences.residual_tolerance,
        "k_upper_bound": opt.k_upper_bound_holds() if opt.in_feasible_region() else None,
    }, None


def cmd_verify(args, config: Config) -> Outcome:
    checks = run_suite(args.suite, config)
    outputs = {
        "suite": args.suite,
        "passed": all(c.passed for c in checks),
        "checks": [c.to_dict() for c in checks],
    }
    return outputs, None


def cmd_diagram(args, config: Config) -> Outcome:
    lam = Partition.parse(args.lam)
    mu = Partition.parse(args.mu) if args.mu else None
    text = render_diagram(lam, mu)
    outputs = {"diagram": text}
    if mu is not None:
        outputs["anatomy"] = anatomy(lam, mu).to_dict()
    return outputs, text


def cmd_reduce(args, config: Config) -> Outcome:
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu)
    trace = reduce_pair(lam, mu, cap=args.T)
    outputs = trace.to_dict()
    outputs["stats"] = sequence_stats(trace.sequences).to_dict()
    return outputs, render_diagram(trace.lam_reduced, trace.mu_reduced)


COMMANDS = {
    "rsk": cmd_rsk,
    "delta": cmd_delta,
    "distance": cmd_distance,
    "construct": cmd_construct,
    "blocks": cmd_blocks,
    "greene": cmd_greene,
    "search": cmd_search,
    "sweep-general": cmd_sweep_general,
    "seqlemma": cmd_seqlemma,
    "verify": cmd_verify,
    "diagram": cmd_diagram,
    "reduce": cmd_reduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", "-c", default=None, help="YAML settings file (default: config/settings.yaml)")
    common.add_argument("--format", "-f", choices=["json", "text", "csv"], default=None, help="Output format")
    common.add_argument("--jsonl", action="store_true", default=None, help="Stream sweep trials as JSON lines")
    common.add_argument("--workers", "-w", type=int, default=None, help="Worker processes (default: CPU count)")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="rsk-lab",
        description="RSK Lab - how far RSK shapes move under transpositions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    p = subparsers.add_parser("rsk", parents=[common], help="Insertion and recording tableaux")
    p.add_argument("--perm", required=True, help='Permutation, e.g. "3 1 2"')

    p = subparsers.add_parser("delta", parents=[common], help="Δ between two partitions")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)

    p = subparsers.add_parser("distance", parents=[common], help="Adjacent-transposition distance")
    p.add_argument("--pi", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")

    p = subparsers.add_parser("construct", parents=[common], help="Extremal pair at distance t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--emit-witness", action="store_true", help="Include monotone decompositions")

    p = subparsers.add_parser("blocks", parents=[common], help="Block decomposition of a diagram pair")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)

    p = subparsers.add_parser("greene", parents=[common], help="Greene invariants by min-cost flow")
    p.add_argument("--perm", required=True)
    p.add_argument("--j", type=int, default=None)

    p = subparsers.add_parser("search", parents=[common], help="Exhaustive search or random walks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--mode", choices=["exhaustive", "walk"], default="exhaustive")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--prune", action="store_true", default=None, help="Reverse/complement symmetry pruning")

    p = subparsers.add_parser("sweep-general", parents=[common], help="Walks of arbitrary transpositions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--side", choices=["left", "right"], default="left")

    p = subparsers.add_parser("seqlemma", parents=[common], help="Sequence-pair experiments")
    p.add_argument("--mode", choices=["enumerate", "tight", "kkt"], default="enumerate")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--T", type=int, default=3)
    p.add_argument("--ell1", type=int, default=1)
    p.add_argument("--ell2", type=int, default=1)
    p.add_argument("--c", type=float, default=2.0)

    p = subparsers.add_parser("verify", parents=[common], help="Run verification suites")
    p.add_argument(
        "--suite",
        choices=["thm2.2", "prop3.5", "lemma3.6", "paper-example", "constructions", "kkt", "all"],
        default="all",
    )

    p = subparsers.add_parser("diagram", parents=[common], help="Draw a diagram, optionally over another")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", default=None)

    p = subparsers.add_parser("reduce", parents=[common], help="Reduce a diagram pair to a sequence pair")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--T", type=int, default=None, help="Cap for the sequence pair")

    return parser


def load_config(args) -> Config:
    """Defaults < YAML < environment < flags."""
    config = Config.load(args.config)
    config.override(
        workers=args.workers,
        format=args.format,
        jsonl=args.jsonl,
        log_level=args.log_level,
        seed=getattr(args, "seed", None),
        trials=getattr(args, "trials", None),
        prune=getattr(args, "prune", None),
    )
    errors = config.validate()
    if errors:
        raise ConfigError("; ".join(errors))
    configure_logging(config.logging.level, config.logging.log_dir)
    return config


PARAM_SKIP = {"command", "config", "format", "jsonl", "workers", "log_level"}


def emit(args, config: Config, outputs: Dict[str, Any], extra: Any, trials: Optional[List[SweepTrial]]) -> None:
    """Write the result to stdout in the configured format."""
    fmt = config.output.format
    if trials is not None and fmt == "csv":
        sys.stdout.write(to_csv([tr.to_row() for tr in trials], SweepTrial.CSV_COLUMNS))
        return
    if trials is not None and config.output.jsonl:
        sys.stdout.write(to_jsonl(tr.to_dict() for tr in trials))
        return
    if fmt == "text":
        console = Console()
        if isinstance(extra, str):
            console.print(extra, highlight=False, markup=False)
            return
        print_result(console, args.command, outputs, extra)
        return
    if fmt == "csv":
        logger.warning(f"csv output applies to sweeps only; writing JSON for {args.command}")
    params = {k: v for k, v in vars(args).items() if k not in PARAM_SKIP}
    record = ResultRecord.build(args.command, params, outputs)
    sys.stdout.write(record.to_json() + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_INVALID

    try:
        config = load_config(args)
        outcome = COMMANDS[args.command](args, config)
        outputs, extra = outcome[0], outcome[1]
        trials = outcome[2] if len(outcome) > 2 else None
        emit(args, config, outputs, extra, trials)
        if args.command == "verify" and not outputs["passed"]:
            failed = [c["name"] for c in outputs["checks"] if not c["passed"]]
            raise VerificationFailure(f"{len(failed)} checks failed", checks=failed)
    except (ValidationError, DomainError, ConfigError, ValueError) as e:
        logger.error(str(e))
        return EXIT_INVALID
    except VerificationFailure as e:
        logger.error(f"{e}: {', '.join(e.checks)}")
        return EXIT_VERIFY
    except ResourceRefusal as e:
        logger.error(str(e))
        return EXIT_REFUSED
    except RSKLabError as e:
        logger.error(str(e))
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
