"""Command-line front end.

    mpxrank analyze --manifest layers.tsv --out results/
    mpxrank cdf     --manifest layers.tsv --method 2 --out results/
    mpxrank curves  --manifest layers.tsv --nodes Manchester,Venice --out results/
    mpxrank scatter --manifest layers.tsv --out results/

Exit codes: 0 success, 1 input or configuration error, 2 fewer than two
common nodes.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCommonSet, MultiplexError
from .graph import DegreeMode, MultiplexNetwork
from .ingest import build_network
from .meowa import DEFAULT_BETAS, parse_beta_grid
from .normalize import ALL_METHODS, Method
from . import report
from .sensitivity import beta_sweep, sensitivity_report

log = logging.getLogger("mpxrank")

FORMATS = ("csv", "json", "svg")

EXIT_OK, EXIT_ERROR, EXIT_EMPTY = 0, 1, 2


@dataclass
class RunConfig:
    manifest: Path
    out: Path = Path(".")
    degree_mode: DegreeMode = DegreeMode.TOTAL
    methods: tuple = ALL_METHODS
    betas: tuple = DEFAULT_BETAS
    tau_agg: int = 2
    tau_norm: int = 2
    formats: frozenset = field(default_factory=lambda: frozenset(("csv", "json")))

    def __post_init__(self):
        self.manifest = Path(self.manifest)
        self.out = Path(self.out)
        self.degree_mode = DegreeMode(self.degree_mode)
        self.methods = tuple(m if isinstance(m, Method) else Method.parse(m) for m in self.methods)
        self.betas = tuple(float(b) for b in self.betas)
        self.formats = frozenset(self.formats)
        if not self.methods:
            raise ValueError("at least one normalization method is required")
        if not self.betas:
            raise ValueError("the beta grid is empty")
        unknown = self.formats - set(FORMATS)
        if unknown:
            raise ValueError(f"unknown output format(s): {', '.join(sorted(unknown))}")


def _load(config: RunConfig) -> MultiplexNetwork:
    network = build_network(config.manifest)
    config.out.mkdir(parents=True, exist_ok=True)
    return network


def _sweep(config: RunConfig, network: MultiplexNetwork):
    return beta_sweep(network, config.methods, config.betas, config.degree_mode)


def cmd_analyze(config: RunConfig) -> int:
    network = _load(config)
    summary = report.dataset_summary(network, config.degree_mode)
    if "json" in config.formats:
        report.write_summary(config.out / "summary.json", summary)
    table = _sweep(config, network)
    records = sensitivity_report(table, config.tau_agg, config.tau_norm)
    if "csv" in config.formats:
        rows = report.write_rankings(config.out / "rankings.csv", table)
        report.write_sensitivity(config.out / "sensitivity.csv", records)
        log.info("wrote %d ranking rows and %d sensitivity rows to %s", rows, len(records), config.out)
    if "svg" in config.formats:
        report.write_scatter(config.out, records, config.tau_agg, config.tau_norm, {"svg"})
    return EXIT_OK


def cmd_cdf(config: RunConfig, method: Method | int | str = Method.M2) -> int:
    method = method if isinstance(method, Method) else Method.parse(method)
    network = _load(config)
    series = report.cdf_series(network, method, config.degree_mode)
    report.write_cdf(config.out, series, method, config.formats)
    return EXIT_OK


def cmd_curves(config: RunConfig, nodes) -> int:
    network = _load(config)
    table = _sweep(config, network)
    valid = set(table.node_order)
    unknown = [v for v in nodes if v not in valid]
    if unknown or not nodes:
        print(f"error: unknown node label(s): {', '.join(unknown) or '(none given)'}", file=sys.stderr)
        print(f"valid labels: {', '.join(table.node_order)}", file=sys.stderr)
        return EXIT_ERROR
    report.write_curves(config.out, table, list(nodes), config.formats)
    return EXIT_OK


def cmd_scatter(config: RunConfig) -> int:
    network = _load(config)
    table = _sweep(config, network)
    records = sensitivity_report(table, config.tau_agg, config.tau_norm)
    report.write_scatter(config.out, records, config.tau_agg, config.tau_norm, config.formats)
    return EXIT_OK


def _csv_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifest", required=True, type=Path, help="tab-separated layer manifest")
    common.add_argument("--degree-mode", choices=[m.value for m in DegreeMode], default="total")
    common.add_argument("--betas", default="-20:20:1", help="MIN:MAX:STEP or a comma-separated list (default -20:20:1)")
    common.add_argument("--methods", default="1,2,3,4", help="normalization methods, e.g. 1,2,3,4")
    common.add_argument("--tau-agg", type=int, default=2, help="delta_agg above this is sensitive")
    common.add_argument("--tau-norm", type=int, default=2, help="delta_norm above this is sensitive")
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument("--format", default=None, help="comma-separated subset of csv,json,svg")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="mpxrank", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="rank all common nodes and compute sensitivities")
    cdf = sub.add_parser("cdf", parents=[common], help="per-layer distribution of normalized degrees")
    cdf.add_argument("--method", default="2", help="normalization method (default 2)")
    curves = sub.add_parser("curves", parents=[common], help="position-vs-beta series for selected nodes")
    curves.add_argument("--nodes", required=True, help="LABEL[,LABEL...]")
    sub.add_parser("scatter", parents=[common], help="delta_agg vs delta_norm scatter")
    return parser


_DEFAULT_FORMATS = {
    "analyze": "csv,json",
    "cdf": "csv,svg",
    "curves": "csv,svg",
    "scatter": "csv,svg",
}


def _glue_betas(argv):
    # "--betas -20:20:1" would otherwise be read as an unknown option
    argv = list(argv)
    for i, arg in enumerate(argv[:-1]):
        if arg == "--betas":
            argv[i:i + 2] = [f"--betas={argv[i + 1]}"]
            break
    return argv


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_betas(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = RunConfig(
            manifest=args.manifest,
            out=args.out,
            degree_mode=args.degree_mode,
            methods=_csv_list(args.methods),
            betas=parse_beta_grid(args.betas),
            tau_agg=args.tau_agg,
            tau_norm=args.tau_norm,
            formats=_csv_list(args.format or _DEFAULT_FORMATS[args.command]),
        )
        if args.command == "analyze":
            return cmd_analyze(config)
        if args.command == "cdf":
            return cmd_cdf(config, args.method)
        if args.command == "curves":
            return cmd_curves(config, _csv_list(args.nodes))
        return cmd_scatter(config)
    except EmptyCommonSet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except (OSError, MultiplexError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
