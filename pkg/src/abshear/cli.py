"""
Command-line front end.

    abshear figure NAME [-o PATH]        fig3a | fig3b | figB1 | figC1 | streamlines
    abshear decompose-grid [-o PATH]     finite-difference shear on an n x n grid
    abshear phase                        semi-classical phase, key = value lines
    abshear verify                       full verification table

Exit codes: 0 ok, 1 verification failed, 2 config/usage error, 3 I/O
error, 4 geometry error, 5 numerical precondition violated.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys

import numpy as np

from .core import load_config
from .decomposition import GRID_COLUMNS, decompose_grid
from .errors import ConfigError, GeometryError, InvalidArgumentError, PreconditionError
from .figures import FIGURES, write_csv
from .phase import ab_phase_numeric
from .verify import run_checks

log = logging.getLogger("abshear")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_GEOMETRY = 4
EXIT_PRECONDITION = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value configuration file")
    common.add_argument("-o", "--output", metavar="PATH", help="output CSV path")
    common.add_argument("--samples", metavar="N", type=int, help="sample count (grid size for decompose-grid)")
    common.add_argument("--step", metavar="H", type=float,
                        help="decompose-grid: stencil step in m (default r*1e-4); streamlines: RK4 dt in s")
    common.add_argument("--rmax", metavar="X", type=float,
                        help="outer extent in units of R (figures: radial range / seed x; grid: half-width)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="abshear", description="Shear of the vector potential around an AB solenoid.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fig = sub.add_parser("figure", parents=[common], help="write figure data as CSV")
    fig.add_argument("name", choices=sorted(FIGURES))
    sub.add_parser("decompose-grid", parents=[common], help="grid shear/curl/divergence CSV")
    sub.add_parser("phase", parents=[common], help="semi-classical AB phase")
    sub.add_parser("verify", parents=[common], help="run all verification checks")
    return parser


def _kv(key, value) -> str:
    if isinstance(value, (int, np.integer)):
        return f"{key} = {value}"
    return f"{key} = {value:.12e}"


def cmd_figure(args, beam, cfg) -> int:
    kwargs = {}
    if args.samples is not None:
        kwargs["samples"] = args.samples
    if args.rmax is not None:
        kwargs["rmax"] = args.rmax
    if args.name == "streamlines" and args.step is not None:
        kwargs["dt"] = args.step
    header, rows = FIGURES[args.name](beam, cfg, **kwargs)
    path = args.output or f"{args.name}.csv"
    write_csv(path, header, rows)
    log.info("wrote %d rows to %s", len(rows), path)
    return EXIT_OK


def cmd_decompose_grid(args, beam, cfg) -> int:
    n = 101 if args.samples is None else args.samples
    half = (5.0 if args.rmax is None else args.rmax) * cfg.radius
    out = decompose_grid(cfg, half, n, h=args.step)
    path = args.output or "decompose_grid.csv"
    write_csv(path, GRID_COLUMNS, out)
    ana = out[:, 8]
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(ana > 0.0, np.abs(out[:, 7] - ana) / ana, np.abs(out[:, 7]))
    print(_kv("points", int(out.shape[0])))
    print(_kv("max_abs_div", float(np.max(np.abs(out[:, 2])))))
    print(_kv("max_abs_curl_z", float(np.max(np.abs(out[:, 3])))))
    print(_kv("max_rel_shear_error", float(np.max(rel))))
    return EXIT_OK


def cmd_phase(args, beam, cfg) -> int:
    res = ab_phase_numeric(beam, cfg, 1002 if args.samples is None else args.samples)
    mean, std = res.speed_diff_mean, res.speed_diff_std
    print(_kv("delta_phi_numeric_rad", res.delta_phi_numeric))
    print(_kv("delta_phi_analytic_rad", res.delta_phi_analytic))
    print(_kv("asymmetry", res.asymmetry))
    print(_kv("speed_diff_mean_mps", mean))
    print(_kv("speed_diff_std_mps", std))
    print(_kv("speed_diff_rel_std", std / abs(mean) if mean != 0.0 else 0.0))
    print(_kv("speed_diff_samples", len(res.speed_diff_trace)))
    print(_kv("circulation_sign", res.circulation_sign))
    return EXIT_OK


def cmd_verify(args, beam, cfg) -> int:
    report = run_checks(beam, cfg)
    print(report.format())
    return EXIT_OK if report.overall else EXIT_VERIFY


COMMANDS = {
    "figure": cmd_figure,
    "decompose-grid": cmd_decompose_grid,
    "phase": cmd_phase,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(format="%(name)s: %(message)s", level=logging.INFO if args.verbose else logging.WARNING)
    try:
        cfg, beam = load_config(args.config)
        for name in ("samples", "step", "rmax"):
            v = getattr(args, name)
            if v is not None and not (math.isfinite(v) and v > 0):
                raise ConfigError(f"--{name} must be positive, got {v!r}")
        return COMMANDS[args.command](args, beam, cfg)
    except ConfigError as exc:
        print(f"abshear: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GeometryError as exc:
        print(f"abshear: geometry error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except PreconditionError as exc:
        print(f"abshear: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvalidArgumentError as exc:
        print(f"abshear: invalid argument: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"abshear: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
