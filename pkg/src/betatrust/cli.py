"""Command-line surface: fuse, decide, simulate, reproduce-table1.

Exit codes: 0 for success and accepted decisions, 2 for a declined
decision, 1 for usage and math errors.  Diagnostics go to stderr.  The
environment variable BETATRUST_VARIANCE overrides the default variance
wherever no --var flag is given.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import documents, netsim
from .decision import COMBINERS, RiskAppetite, evaluate_request
from .errors import TrustError
from .fusion import (
    DEFAULT_VARIANCE,
    TrustEstimate,
    combined_trust,
    fusion_weights,
    moments_to_beta,
    posterior_params,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DECLINE = 2

VARIANCE_ENV = "BETATRUST_VARIANCE"


def _env_default_variance() -> float:
    raw = os.environ.get(VARIANCE_ENV)
    if raw is None:
        return DEFAULT_VARIANCE
    try:
        value = float(raw)
    except ValueError:
        raise TrustError(f"{VARIANCE_ENV} must be a number, got {raw!r}") from None
    if value <= 0.0:
        raise TrustError(f"{VARIANCE_ENV} must be positive, got {raw!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betatrust",
        description="Trust and risk assessment via Beta-distribution evidence fusion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fuse = sub.add_parser("fuse", help="fuse a direct and an indirect trust value")
    fuse.add_argument("--a", type=float, required=True, help="direct trust mean")
    fuse.add_argument("--b", type=float, required=True, help="indirect trust mean")
    fuse.add_argument("--var", type=float, default=None, help="variance for both sources")
    fuse.add_argument("--var-a", type=float, default=None, help="direct variance override")
    fuse.add_argument("--var-b", type=float, default=None, help="indirect variance override")

    decide = sub.add_parser("decide", help="run the A -> B -> C acceptance chain")
    decide.add_argument("--t", type=float, required=True, help="required trust")
    decide.add_argument("--a", type=float, required=True, help="direct trust mean")
    decide.add_argument("--b", type=float, required=True, help="indirect trust mean")
    decide.add_argument("--var", type=float, default=None, help="variance for both sources")
    decide.add_argument("--appetite", type=float, default=0.0,
                        help="maximum acceptable risk (default 0)")

    simulate = sub.add_parser("simulate", help="assess a random or bundled network")
    simulate.add_argument("--nodes", type=int, default=None, help="node count")
    simulate.add_argument("--seed", type=int, default=0, help="scenario seed")
    simulate.add_argument("--edge-prob", type=float, default=0.3,
                          help="edge probability (default 0.3)")
    simulate.add_argument("--var", type=float, default=None, help="variance for all estimates")
    simulate.add_argument("--appetite", type=float, default=0.0,
                          help="per-node maximum acceptable risk (default 0)")
    simulate.add_argument("--method", choices=sorted(COMBINERS), default="beta",
                          help="combiner for the C step (default beta)")
    simulate.add_argument("--table1", action="store_true",
                          help="use the bundled three-node reference network")
    simulate.add_argument("--out", type=Path, required=True, help="output directory")

    reproduce = sub.add_parser(
        "reproduce-table1",
        help="print the bundled three-node reference assessment",
    )
    reproduce.add_argument("--method", choices=sorted(COMBINERS), default="beta",
                           help="combiner for the C step (default beta)")
    return parser


def _estimate(mean: float, variance: float, label: str) -> TrustEstimate:
    try:
        return TrustEstimate(mean, variance)
    except (TrustError, ValueError) as exc:
        raise TrustError(f"{label}: {exc}") from exc


def _cmd_fuse(args: argparse.Namespace) -> int:
    variance = args.var if args.var is not None else _env_default_variance()
    direct = _estimate(args.a, args.var_a if args.var_a is not None else variance, "--a")
    indirect = _estimate(args.b, args.var_b if args.var_b is not None else variance, "--b")
    try:
        params_a = moments_to_beta(direct)
    except TrustError as exc:
        raise TrustError(f"moment inversion of the direct estimate failed: {exc}") from exc
    try:
        params_b = moments_to_beta(indirect)
    except TrustError as exc:
        raise TrustError(f"moment inversion of the indirect estimate failed: {exc}") from exc
    posterior_params(params_a, params_b)
    weights = fusion_weights(params_a, params_b)
    combined = combined_trust(direct, indirect)
    for name, value in (
        ("alpha_a", params_a.alpha),
        ("beta_a", params_a.beta),
        ("alpha_b", params_b.alpha),
        ("beta_b", params_b.beta),
        ("k", weights.k),
        ("w_a", weights.w_a),
        ("w_b", weights.w_b),
        ("combined", combined),
    ):
        print(f"{name} {value:.6f}")
    return EXIT_OK


def _cmd_decide(args: argparse.Namespace) -> int:
    variance = args.var if args.var is not None else _env_default_variance()
    record = evaluate_request(
        args.t,
        _estimate(args.a, variance, "--a"),
        _estimate(args.b, variance, "--b"),
        RiskAppetite(args.appetite),
    )
    combined = "-" if record.combined is None else f"{record.combined:.6f}"
    print(f"decision {record.decision.value}")
    print(f"combined {combined}")
    print(f"risk {record.risk:.6f}")
    return EXIT_OK if record.decision.accepted else EXIT_DECLINE


def _cmd_simulate(args: argparse.Namespace) -> int:
    variance = args.var if args.var is not None else _env_default_variance()
    if args.table1:
        if args.nodes is not None and args.nodes != 3:
            raise TrustError("--table1 is a three-node scenario; omit --nodes or pass 3")
        network = netsim.fixture_three_node()
    else:
        if args.nodes is None:
            raise TrustError("--nodes is required unless --table1 is given")
        config = netsim.ScenarioConfig(
            seed=args.seed,
            node_count=args.nodes,
            edge_probability=args.edge_prob,
            variance_direct=variance,
            variance_indirect=variance,
            max_acceptable_risk=args.appetite,
        )
        network = netsim.generate_network(config)

    result = netsim.run_assessment(network, COMBINERS[args.method])
    for error in result.errors:
        print(f"edge {error.from_node}->{error.to_node}: {error.kind}: {error.message}",
              file=sys.stderr)

    args.out.mkdir(parents=True, exist_ok=True)
    labels = list(range(1, network.node_count + 1))
    matrices_path = args.out / "matrices.csv"
    series_path = args.out / "risk_series.csv"
    matrices_path.write_text(
        documents.render_matrices(labels, result.as_matrix_dict(),
                                  comments=[f"combiner: {args.method}"]),
        encoding="utf-8",
    )
    series_path.write_text(
        documents.render_risk_table(labels, result.r_matrix), encoding="utf-8"
    )

    print(f"nodes {network.node_count}")
    print(f"edges {len(network.edges)}")
    for name, count in result.decision_tally().items():
        print(f"{name} {count}")
    print(f"errors {len(result.errors)}")
    print(f"wrote {matrices_path}")
    print(f"wrote {series_path}")
    return EXIT_OK


def _cmd_reproduce_table1(args: argparse.Namespace) -> int:
    network = netsim.fixture_three_node()
    result = netsim.run_assessment(network, COMBINERS[args.method])
    comments = [f"combiner: {args.method}"]
    if args.method == "beta":
        comments.append(
            f"variance assumption: direct={DEFAULT_VARIANCE}, indirect={DEFAULT_VARIANCE}"
        )
    labels = list(range(1, network.node_count + 1))
    sys.stdout.write(documents.render_matrices(labels, result.as_matrix_dict(), comments))
    return EXIT_OK


_COMMANDS = {
    "fuse": _cmd_fuse,
    "decide": _cmd_decide,
    "simulate": _cmd_simulate,
    "reproduce-table1": _cmd_reproduce_table1,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for declines here
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except TrustError as exc:
        print(f"betatrust {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"betatrust {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
