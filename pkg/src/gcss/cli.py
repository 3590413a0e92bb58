"""Command-line front end: ``gcss SOURCE -l L [options]``.

Loads the source matrix, builds the target, runs the greedy selection and
writes a JSON report (sorted keys) to ``--output`` or stdout. Column indices
are 0-based.

Exit codes: 0 success, 2 invalid configuration, 3 input/output error,
4 numerical failure.
"""
import argparse
import json
import sys
import time
import warnings
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .exceptions import MatrixFormatError, NumericalBreakdown, RankDeficiencyWarning, SvdConvergenceError
from .greedy import ToleranceConfig, greedy_select
from .io import FORMATS, load_matrix, write_matrix_csv
from .oracle import solve_coefficients
from .targets import ExternalTarget, FeaturePartition, RandomProjection, SelfTarget, SvdTarget, build_target

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    source_path: str
    num_columns: int
    source_format: Optional[str] = None
    skip_header: bool = False
    target_mode: str = "self"
    seed: int = 0
    eps_admit: float = 1e-10
    eps_stop: float = 0.0
    refresh_every: Optional[int] = None
    output_path: Optional[str] = None
    emit_coefficients: bool = False
    coefficients_path: Optional[str] = None

    def validate(self):
        if self.num_columns < 1:
            raise ConfigError(f"number of columns must be >= 1, got {self.num_columns}")
        if self.source_format is not None and self.source_format not in FORMATS:
            raise ConfigError(f"unknown format {self.source_format!r}")
        if self.emit_coefficients and not (self.coefficients_path or self.output_path):
            raise ConfigError("--emit-coefficients needs --coefficients-path or --output")
        parse_target_mode(self.target_mode, self.seed)
        self.tolerances()

    def tolerances(self):
        try:
            return ToleranceConfig(
                eps_admit=self.eps_admit, eps_stop=self.eps_stop, refresh_every=self.refresh_every
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def coefficients_destination(self):
        if self.coefficients_path:
            return self.coefficients_path
        out = Path(self.output_path)
        return str(out.with_name(out.stem + ".coefficients.csv"))


def parse_target_mode(mode, seed=0):
    """Turn ``self``, ``rproj:R``, ``partition:C``, ``svd[:K]`` or ``file:PATH`` into a target spec.

    ``file:`` returns the path string; the caller loads it.
    """
    kind, _, arg = mode.partition(":")
    try:
        if kind == "self" and not arg:
            return SelfTarget()
        if kind == "rproj":
            return RandomProjection(int(arg), seed)
        if kind == "partition":
            return FeaturePartition(int(arg), seed)
        if kind == "svd":
            return SvdTarget(int(arg) if arg else None)
        if kind == "file" and arg:
            return arg
    except ValueError:
        pass
    raise ConfigError(f"bad target mode {mode!r}")


def dump_report(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_report(text):
    return json.loads(text)


def run(config):
    """Execute one selection run and return the report document (a dict)."""
    config.validate()
    started = time.perf_counter()
    A = load_matrix(config.source_path, config.source_format, config.skip_header)
    n = A.shape[1]
    if config.num_columns > n:
        raise ConfigError(f"cannot select {config.num_columns} columns from {n}")
    spec = parse_target_mode(config.target_mode, config.seed)
    if isinstance(spec, str):
        spec = ExternalTarget(load_matrix(spec, skip_header=config.skip_header))
    B = build_target(A, spec, l=config.num_columns)

    advisories = []
    tol = config.tolerances()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", RankDeficiencyWarning)
        report = greedy_select(A, B, config.num_columns, tol)
        if config.emit_coefficients and report.selected:
            T = solve_coefficients(A, report.selected, B)
            write_matrix_csv(config.coefficients_destination(), T)
    for w in caught:
        if issubclass(w.category, RankDeficiencyWarning):
            advisories.append(f"rank deficiency: {w.message}")
    if report.stopped_early:
        advisories.append(f"stopped early after {len(report.selected)} columns: {report.stop_reason}")
    for t in report.refreshes:
        advisories.append(f"scores refreshed from residuals after iteration {t}")

    doc = {
        "config": asdict(config),
        "selected": report.selected,
        "iterations": [asdict(rec) for rec in report.iterations],
        "initial_objective": report.initial_objective,
        "final_objective": report.final_objective,
        "stopped_early": report.stopped_early,
        "stop_reason": report.stop_reason,
        "advisories": advisories,
        "wall_time": time.perf_counter() - started,
    }
    text = dump_report(doc)
    if config.output_path:
        Path(config.output_path).write_text(text)
    else:
        sys.stdout.write(text)
    return doc


def build_parser():
    p = argparse.ArgumentParser(prog="gcss", description=__doc__.splitlines()[0])
    p.add_argument("source", help="source matrix file (.csv, .txt, .mtx, .mm)")
    p.add_argument("-l", "--num-columns", type=int, required=True, help="number of columns to select")
    p.add_argument("--format", choices=FORMATS, help="override format detection")
    p.add_argument("--header", action="store_true", help="skip the first line of CSV inputs")
    p.add_argument(
        "--target",
        default="self",
        help="self | rproj:R | partition:C | svd[:K] | file:PATH (default: self)",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for random targets")
    p.add_argument("--eps-admit", type=float, default=1e-10)
    p.add_argument("--eps-stop", type=float, default=0.0)
    p.add_argument("--refresh-every", type=int, default=None)
    p.add_argument("-o", "--output", help="report path (default: stdout)")
    p.add_argument("--emit-coefficients", action="store_true", help="write least-squares coefficients as CSV")
    p.add_argument("--coefficients-path", help="where to write coefficients (default: <output>.coefficients.csv)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = RunConfig(
        source_path=args.source,
        num_columns=args.num_columns,
        source_format=args.format,
        skip_header=args.header,
        target_mode=args.target,
        seed=args.seed,
        eps_admit=args.eps_admit,
        eps_stop=args.eps_stop,
        refresh_every=args.refresh_every,
        output_path=args.output,
        emit_coefficients=args.emit_coefficients,
        coefficients_path=args.coefficients_path,
    )
    try:
        run(config)
    except (OSError, MatrixFormatError) as exc:
        print(f"gcss: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NumericalBreakdown, SvdConvergenceError) as exc:
        print(f"gcss: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"gcss: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
