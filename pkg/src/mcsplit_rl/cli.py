"""Command-line front end: ``solve``, ``bench`` and ``oracle`` subcommands.

Exit codes: 0 solved / all agree, 1 usage or input error, 2 timeout,
3 engine disagrees with the oracle.
"""

from __future__ import annotations

import argparse
import logging
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, UsageError, verify_common_subgraph
from .instance_io import (
    RESULT_HEADER,
    ParseError,
    ParseOptions,
    error_row,
    read_lad,
    write_result_row,
)
from .oracle import DEFAULT_CAP, brute_force_mcs
from .search import DEFAULT_TIMEOUT, SolveConfig, Status, run

log = logging.getLogger(__name__)

ALL_CONFIGS = ("degree", "rl", "degree-td", "rl-td")

EXIT_OK, EXIT_USAGE, EXIT_TIMEOUT, EXIT_DISAGREE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ManifestEntry:
    instance_id: str
    pattern: Path
    target: Path
    opts: ParseOptions


def read_manifest(path: Path) -> list[ManifestEntry]:
    """Tab-separated ``id, pattern, target[, flags]`` lines; ``#`` starts a comment."""
    base = path.parent
    entries = []
    seen = set()
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (3, 4):
            raise ValueError(f"{path}:{lineno}: expected 3 or 4 tab-separated fields")
        iid, p, t = fields[:3]
        if iid in seen:
            raise ValueError(f"{path}:{lineno}: duplicate instance id {iid!r}")
        seen.add(iid)
        opts = ParseOptions.from_flags(fields[3] if len(fields) == 4 else "")
        entries.append(ManifestEntry(iid, base / p, base / t, opts))
    return entries


def _load_pair(pattern, target, opts: ParseOptions) -> tuple[Graph, Graph]:
    return read_lad(pattern, opts), read_lad(target, opts)


def run_entry(entry: ManifestEntry, config_name: str, cutoff: float) -> str:
    """Solve one (instance, config) pair in isolation and format its CSV row."""
    config = SolveConfig.from_name(config_name, timeout=cutoff)
    try:
        gp, gt = _load_pair(entry.pattern, entry.target, entry.opts)
    except (OSError, ParseError) as e:
        log.warning("%s: %s", entry.instance_id, e)
        return error_row(config, entry.instance_id)
    return write_result_row(run(gp, gt, config), config, entry.instance_id)


def summarise(rows: list[str], configs: list[str], n_instances: int) -> list[str]:
    """Per-config solved count and mean time over that config's solved rows."""
    lines = []
    for name in configs:
        config = SolveConfig.from_name(name)
        times = []
        for row in rows:
            f = row.split(",")
            if f[1] == config.policy.value and f[2] == str(config.top_down).lower() and f[3] == "solved":
                times.append(float(f[5]))
        mean = f"{statistics.fmean(times):.3f}" if times else "-"
        lines.append(f"{name}: solved {len(times)}/{n_instances} mean {mean}s")
    return lines


def cactus_rows(rows: list[str], configs: list[str]) -> list[str]:
    """``config,rank,time`` points: solved instances sorted by time."""
    out = ["config,solved,time"]
    for name in configs:
        config = SolveConfig.from_name(name)
        times = sorted(
            float(f[5])
            for f in (r.split(",") for r in rows)
            if f[1] == config.policy.value and f[2] == str(config.top_down).lower() and f[3] == "solved"
        )
        out.extend(f"{name},{i},{t:.3f}" for i, t in enumerate(times, 1))
    return out


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pattern", required=True, type=Path)
    p.add_argument("--target", required=True, type=Path)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--labelled", action="store_true")
    p.add_argument("--timeout", type=_positive, default=DEFAULT_TIMEOUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mcsplit-rl", description="Maximum common induced subgraph solver.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a single instance")
    _add_instance_args(p)
    p.add_argument("--heuristic", choices=("degree", "rl"), default="rl")
    p.add_argument("--top-down", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--quiet", action="store_true", help="omit the match list")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a manifest of instances under a cutoff")
    p.add_argument("--manifest", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--configs", default=",".join(ALL_CONFIGS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cutoff", type=_positive, default=DEFAULT_TIMEOUT)
    p.add_argument("--cactus", type=Path, help="also write sorted solve times here")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="cross-check all solver configs against brute force")
    _add_instance_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_oracle)
    return parser


def cmd_solve(args) -> int:
    config = SolveConfig.from_name(
        args.heuristic + ("-td" if args.top_down else ""), timeout=args.timeout
    )
    gp, gt = _load_pair(args.pattern, args.target, ParseOptions(args.directed, args.labelled))
    result = run(gp, gt, config)
    print(f"size {result.size}")
    print(f"status {result.status.value}")
    if not args.quiet:
        for v, w in sorted(result.best):
            print(f"({v} -> {w})")
    if args.stats:
        st = result.stats
        print(f"recursive_calls {st.recursive_calls}")
        print(f"time_total {st.time_total:.3f}")
        print(f"time_opt {st.time_opt:.3f}")
        print(f"v_sd {st.v_sd:.6f}")
        print(f"w_sd {st.w_sd:.6f}")
    return EXIT_OK if result.status is Status.SOLVED else EXIT_TIMEOUT


def cmd_bench(args) -> int:
    configs = [c.strip() for c in args.configs.split(",") if c.strip()]
    for c in configs:
        if c not in ALL_CONFIGS:
            raise UsageError(f"unknown config {c!r}; choose from {', '.join(ALL_CONFIGS)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    entries = read_manifest(args.manifest)
    tasks = [(e, c, args.cutoff) for e in entries for c in configs]
    if args.jobs == 1:
        rows = [run_entry(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(run_entry, *zip(*tasks))) if tasks else []
    args.out.write_text("\n".join([RESULT_HEADER, *rows]) + "\n", encoding="utf-8")
    for line in summarise(rows, configs, len(entries)):
        print(line)
    if args.cactus is not None:
        args.cactus.write_text("\n".join(cactus_rows(rows, configs)) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_oracle(args) -> int:
    gp, gt = _load_pair(args.pattern, args.target, ParseOptions(args.directed, args.labelled))
    expected = brute_force_mcs(gp, gt, args.cap).size
    parts = [f"oracle {expected}"]
    agree = True
    for name in ALL_CONFIGS:
        result = run(gp, gt, SolveConfig.from_name(name, timeout=args.timeout))
        ok = (
            result.status is Status.SOLVED
            and result.size == expected
            and verify_common_subgraph(gp, gt, result.best)
        )
        agree &= ok
        parts.append(f"{name} {result.size} {'ok' if ok else 'MISMATCH'}")
    print("; ".join(parts))
    return EXIT_OK if agree else EXIT_DISAGREE


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ValueError) as e:
        # ParseError, UsageError, OracleRefused and manifest errors are ValueErrors
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
