"""Batch runner: execute selected verification suites and emit reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error, 3 runtime error while executing checks or writing the report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .report import CheckReport, summarize
from .suites import (
    integrals_suite,
    qdilog_suite,
    representation_suite,
    symbolic_suite,
)

SUITES = ("qdilog", "integrals", "symbolic", "representation")

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


@dataclass
class RunConfig:
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    b: float = 0.83
    omega1: float = 0.83
    omega2: float = 1.0 / 0.83
    seed: int = 42
    trials: int = 20
    tolerances: dict[str, float] = field(default_factory=dict)
    max_N: int = 4
    max_M: int = 4
    gl_rank: int = 3
    report_path: str | None = None
    workers: int = 1


class UsageError(ValueError):
    pass


def _read_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` file; blank lines and # comments ignored."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key] = value
    return values


def _apply_file_values(cfg: RunConfig, values: dict[str, str]) -> None:
    casts = {
        "b": float, "omega1": float, "omega2": float,
        "seed": int, "trials": int, "max_N": int, "max_M": int,
        "gl_rank": int, "workers": int, "report": str,
    }
    for key, raw in values.items():
        if key == "suites":
            cfg.suites = [s.strip() for s in raw.split(",") if s.strip()]
        elif key.startswith("tol."):
            cfg.tolerances[key[4:]] = float(raw)
        elif key == "report":
            cfg.report_path = raw
        elif key in casts:
            setattr(cfg, key, casts[key](raw))
        else:
            raise UsageError(f"unknown config key {key!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdlab",
        description="Run verification suites for the quantum-dilogarithm / "
        "quantum-group toolkit.",
    )
    parser.add_argument(
        "--suite", action="append", choices=SUITES, dest="suites", metavar="NAME",
        help="suite to run (repeatable); default: all",
    )
    parser.add_argument("--config", help="flat key = value configuration file")
    parser.add_argument("--b", type=float, help="quantum parameter b (default 0.83)")
    parser.add_argument("--omega1", type=float, help="omega_1 (default 0.83)")
    parser.add_argument("--omega2", type=float, help="omega_2 (default 1/0.83)")
    parser.add_argument("--seed", type=int, help="RNG seed (default 42)")
    parser.add_argument("--trials", type=int, help="trials per relation (default 20)")
    parser.add_argument(
        "--tol", action="append", metavar="SUITE=VAL", dest="tols",
        help="per-suite tolerance override, e.g. --tol integrals=1e-8",
    )
    parser.add_argument("--max-N", type=int, dest="max_N", help="symbolic bound N")
    parser.add_argument("--max-M", type=int, dest="max_M", help="symbolic bound M")
    parser.add_argument("--gl-rank", type=int, choices=(2, 3), dest="gl_rank")
    parser.add_argument("--report", metavar="PATH", help="report file path")
    parser.add_argument("--workers", type=int, help="concurrent workers (default 1)")
    return parser


def parse_config(argv: list[str]) -> RunConfig:
    """CLI flags override config-file values override defaults."""
    args = _build_parser().parse_args(argv)
    cfg = RunConfig()
    if args.config:
        _apply_file_values(cfg, _read_config_file(args.config))
    for name in ("b", "omega1", "omega2", "seed", "trials", "max_N", "max_M",
                 "gl_rank", "workers"):
        value = getattr(args, name)
        if value is not None:
            setattr(cfg, name, value)
    if args.suites:
        cfg.suites = list(dict.fromkeys(args.suites))
    if args.report:
        cfg.report_path = args.report
    for spec in args.tols or ():
        if "=" not in spec:
            raise UsageError(f"--tol expects SUITE=VALUE, got {spec!r}")
        suite, _, raw = spec.partition("=")
        if suite not in SUITES:
            raise UsageError(f"--tol: unknown suite {suite!r}")
        try:
            value = float(raw)
        except ValueError as exc:
            raise UsageError(f"--tol {spec!r}: bad value") from exc
        if value <= 0:
            raise UsageError(f"--tol {spec!r}: tolerance must be positive")
        cfg.tolerances[suite] = value
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if not cfg.suites:
        raise UsageError("at least one suite must be selected")
    for s in cfg.suites:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}")
    if cfg.b <= 0 or cfg.omega1 <= 0 or cfg.omega2 <= 0:
        raise UsageError("b, omega1 and omega2 must be positive")
    if cfg.trials < 1:
        raise UsageError("trials must be >= 1")
    if cfg.gl_rank not in (2, 3):
        raise UsageError("gl_rank must be 2 or 3")
    if cfg.workers < 1:
        raise UsageError("workers must be >= 1")
    if not (0 <= cfg.max_N and 0 <= cfg.max_M):
        raise UsageError("max_N and max_M must be non-negative")
    if cfg.seed < 0 or cfg.seed >= 2**64:
        raise UsageError("seed must fit in 64 unsigned bits")
    for suite, tol in cfg.tolerances.items():
        if tol <= 0:
            raise UsageError(f"tolerance for {suite} must be positive")


def _suite_jobs(cfg: RunConfig) -> list:
    """One zero-argument callable per suite, each returning CheckReports."""
    jobs = []
    if "qdilog" in cfg.suites:
        jobs.append(
            lambda: qdilog_suite(
                b_values=(cfg.b,), tolerance=cfg.tolerances.get("qdilog")
            )
        )
    if "integrals" in cfg.suites:
        jobs.append(
            lambda: integrals_suite(
                b=cfg.b, tolerance=cfg.tolerances.get("integrals", 1e-6)
            )
        )
    if "symbolic" in cfg.suites:
        jobs.append(lambda: symbolic_suite(max_N=cfg.max_N, max_M=cfg.max_M))
    if "representation" in cfg.suites:
        jobs.append(
            lambda: representation_suite(
                omega1=cfg.omega1,
                omega2=cfg.omega2,
                gl_rank=cfg.gl_rank,
                trials=cfg.trials,
                seed=cfg.seed,
                tolerance=cfg.tolerances.get("representation", 1e-8),
            )
        )
    return jobs


def _report_path(cfg: RunConfig) -> Path:
    if cfg.report_path:
        return Path(cfg.report_path)
    directory = os.environ.get("MDLAB_REPORT_DIR", ".")
    return Path(directory) / "mdlab_report.json"


def run(cfg: RunConfig, out=sys.stdout) -> int:
    start = time.perf_counter()
    jobs = _suite_jobs(cfg)
    reports: list[CheckReport] = []
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            for result in pool.map(lambda job: job(), jobs):
                reports.extend(result)
    else:
        for job in jobs:
            reports.extend(job())

    for r in reports:
        print(r, file=out)
    summary = summarize(reports)
    passed, total = summary["passed"], summary["total"]
    wall = time.perf_counter() - start
    print(f"{passed}/{total} checks passed in {wall:.1f}s", file=out)

    payload = {
        "version": __version__,
        "config": asdict(cfg),
        "checks": [r.to_dict() for r in reports],
        "summary": summary,
        "wall_time": wall,
    }
    path = _report_path(cfg)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"report written to {path}", file=out)
    return EXIT_OK if passed == total else EXIT_CHECK_FAILURE


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error reading config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # argparse exits with 2 on bad flags and 0 on --help
        return int(exc.code or 0)
    try:
        return run(cfg)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # numeric/runtime failures are not check failures
        print(f"runtime error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
