"""Command-line entry point.

Single-line CHECK/BETTI/COMPLEX/CCT records go to standard output; prose
goes to standard error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import cct, cohomology
from .complex import FacetParseError, load_facets
from .scalars import FieldError, FieldSpec, field_make, parse_field
from .subdivision import HOCHSCHILD, SIMPLICIAL

COMMANDS = ("validate", "betti", "hh-betti", "verify", "compare")
CHECKS = ("bdga-simplicial", "bdga-hochschild", "cct-chain", "cct-cup", "cct-brace")
# cochain degrees sampled by `verify`
VERIFY_DEGREE_CAP = 2


@dataclass
class RunConfig:
    command: str
    input_path: str
    field: FieldSpec = field(default_factory=lambda: parse_field("z101"))
    seed: int = 0
    trials: int = 50
    max_degree: int = 3
    max_args: int = 2
    normalized: bool = True
    checks: tuple = CHECKS
    dump: str | None = None


def _field_arg(text):
    try:
        return parse_field(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _u64(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonnegative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _checks(text):
    names = tuple(t for t in text.split(",") if t)
    bad = [n for n in names if n not in CHECKS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"unknown checks {','.join(bad)!r}; choose from {','.join(CHECKS)}")
    return tuple(n for n in CHECKS if n in names)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gscct",
        description="Compare simplicial and relative Hochschild cochains of a "
                    "simplicial complex given as a facet file.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input_path", metavar="FACETS")
    parser.add_argument("--field", type=_field_arg, default=parse_field("z101"),
                        help="q or z<p> (default z101)")
    parser.add_argument("--seed", type=_u64, default=0)
    parser.add_argument("--trials", type=_positive, default=50)
    parser.add_argument("--max-degree", type=_nonnegative, default=3)
    parser.add_argument("--max-args", type=_positive, default=2)
    parser.add_argument("--full-complex", action="store_true",
                        help="use all chains instead of the normalized subcomplex")
    parser.add_argument("--checks", type=_checks, default=CHECKS,
                        help="comma-separated subset of " + ",".join(CHECKS))
    parser.add_argument("--dump", metavar="PATH",
                        help="write discrepancy cochains of failed checks here")
    return parser


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command, input_path=ns.input_path, field=ns.field, seed=ns.seed,
        trials=ns.trials, max_degree=ns.max_degree, max_args=ns.max_args,
        normalized=not ns.full_complex, checks=ns.checks, dump=ns.dump)


def run_verify(K, F, config: RunConfig) -> list[cct.CheckReport]:
    degrees = min(config.max_degree, VERIFY_DEGREE_CAP)
    common = dict(degrees=degrees, seed=config.seed, trials=config.trials)
    reports = []
    for name in config.checks:
        if name == "bdga-simplicial":
            reports += cct.verify_bdga(K, F, SIMPLICIAL, max_args=config.max_args, **common)
        elif name == "bdga-hochschild":
            reports += cct.verify_bdga(K, F, HOCHSCHILD, max_args=config.max_args, **common)
        elif name == "cct-chain":
            reports.append(cct.verify_chain_map(K, F, **common))
        elif name == "cct-cup":
            reports.append(cct.verify_cup_map(K, F, **common))
        elif name == "cct-brace":
            reports.append(cct.verify_brace_map(K, F, max_args=config.max_args, **common))
    return reports


def write_dump(path, reports):
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            if r.passed or r.witness is None:
                continue
            fh.write(f"# CHECK {r.name} degree={r.witness.degree}\n")
            for line in r.witness.dump_lines():
                fh.write(line + "\n")


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, standard output text)."""
    try:
        K = load_facets(config.input_path)
    except FacetParseError as exc:
        print(f"{config.input_path}: {exc}", file=sys.stderr)
        return 2, ""
    except OSError as exc:
        print(f"cannot read {config.input_path}: {exc}", file=sys.stderr)
        return 2, ""
    F = field_make(config.field)
    lines = []
    status = 0

    if config.command == "validate":
        counts = " ".join(f"dim{d}={c}" for d, c in enumerate(K.f_vector()))
        lines.append(f"COMPLEX vertices={len(K.vertices)} simplices={len(K)} : {counts}")
    elif config.command in ("betti", "hh-betti"):
        side = SIMPLICIAL if config.command == "betti" else HOCHSCHILD
        table = cohomology.betti(K, side, F, config.max_degree, config.normalized)
        lines.append(table.render())
    elif config.command == "compare":
        tables = [cohomology.betti(K, side, F, config.max_degree, config.normalized)
                  for side in (SIMPLICIAL, HOCHSCHILD)]
        lines += [t.render() for t in tables]
        agree = tables[0].values == tables[1].values
        lines.append("CCT PASS" if agree else "CCT FAIL")
        status = 0 if agree else 1
    elif config.command == "verify":
        reports = run_verify(K, F, config)
        lines += [r.render() for r in reports]
        failed = [r for r in reports if not r.passed]
        if failed:
            status = 1
            if config.dump:
                write_dump(config.dump, failed)
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=sys.stderr)
    return status, "".join(line + "\n" for line in lines)


def main(argv=None) -> int:
    config = config_from_args(argv)
    status, text = run(config)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
