"""Command-line interface: ``nilorder {order,hall,verify,catalog}``.

Exit status: 0 success, 1 theorem violation or golden mismatch, 2 usage or
configuration error, 3 unknown group, 4 malformed element or spec file,
5 group closure cap exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .elements import PERM, format_cycles
from .errors import (
    ConfigurationError,
    DomainError,
    GroupTooLarge,
    InternalInconsistency,
    MembershipError,
    PreconditionError,
    RepresentationMismatch,
    SpecFormatError,
    TheoremViolation,
)
from .groups import DEFAULT_CAP
from .hall.basis import MAX_GAMMA

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNKNOWN_GROUP, EXIT_MALFORMED, EXIT_TOO_LARGE = range(6)

log = logging.getLogger("nilorder")


class UnknownGroup(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    groups: tuple = ()
    all_groups: bool = False
    checks: tuple | None = None
    workers: int = 1
    output: str | None = None
    fmt: str = "text"
    cap: int = DEFAULT_CAP
    max_gamma: int = MAX_GAMMA
    backend: str | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigurationError("worker count must be at least 1")
        if self.cap < 1:
            raise ConfigurationError("cap must be at least 1")
        if self.fmt not in ("text", "tsv"):
            raise ConfigurationError(f"unknown format {self.fmt!r}")


def load_group(source: str, cap=DEFAULT_CAP):
    """A catalog group by name, or a group read from a spec file path."""
    from .groupspec import load_spec
    from .harness.catalog import BY_NAME, build

    if source in BY_NAME:
        entry = BY_NAME[source]
        return build(source) if cap >= entry.expected_order else entry.build(cap=cap)
    path = Path(source)
    if path.is_file():
        return load_spec(path, cap=cap)
    raise UnknownGroup(f"unknown group {source!r}: not a catalog name or a spec file")


def _fmt_element(x):
    if x.kind == PERM:
        return format_cycles(x)
    return " ".join(str(v) for v in x.data)


def _write(text, output=None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------


def cmd_order(args) -> int:
    from .class2 import classify_pair
    from .groupspec import parse_element
    from .harness.report import fraction_str
    from .order import jungnickel_data

    G = load_group(args.group, args.cap)
    a = parse_element(args.a, G)
    b = parse_element(args.b, G)
    rep = jungnickel_data(a, b)
    lines = [
        f"group: {G.name or args.group}",
        f"a: {_fmt_element(a)}",
        f"b: {_fmt_element(b)}",
        f"m: {rep.m}",
        f"n: {rep.n}",
        f"e: {rep.e}",
        f"D: {rep.D}",
        f"epsilon: {rep.epsilon}",
        f"o(a,b): {rep.mutual_order}",
        f"o(ab): {rep.product_order}",
        f"ratio: {fraction_str(rep.ratio)}",
        f"r: {rep.r_commutator}",
    ]
    cls = G.nilpotency_class
    if cls is not None and cls <= 2:
        v = classify_pair(G, a, b)
        witness = "n/a" if v.witness_equal is None else str(v.witness_equal).lower()
        lines += [
            f"class2.case: {v.case_tag}",
            f"class2.q: {v.q}",
            f"class2.predicted: {fraction_str(v.predicted_ratio)}",
            f"class2.witness: {witness}",
        ]
    _write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_hall(args) -> int:
    from .hall.basis import hall_basis
    from .hall.constants import class_constants
    from .hall.polynomials import hall_polynomials, parse_golden

    gamma = args.gamma
    if gamma > args.max_gamma:
        raise DomainError(f"class {gamma} exceeds --max-gamma {args.max_gamma}")
    basis = hall_basis(gamma)
    polys = hall_polynomials(gamma)
    k = class_constants(gamma)
    lines = [f"class: {gamma}", f"basis: {len(basis)}"]
    lines += [f"c{c.index} weight={c.weight} {c.name}" for c in basis]
    lines.append("lambda:")
    for idx, f in sorted(polys.items()):
        lines.append(f"f{idx} weight={basis[idx].weight} " + " ".join(map(str, f.coefficients)))
    lines += [f"r_formal: {k.r_formal}", f"A: {k.A}", f"B: {k.B}", f"C: {k.C}"]
    status = EXIT_OK
    if args.golden:
        try:
            golden = parse_golden(Path(args.golden).read_text())
        except (OSError, ValueError) as exc:
            raise SpecFormatError(f"cannot read golden file: {exc}") from None
        expected = {kk: v for (g, kk), v in golden.items() if g == gamma}
        observed = {idx: (basis[idx].weight, f.coefficients) for idx, f in polys.items()}
        bad = sorted(set(expected) ^ set(observed)) + sorted(
            kk for kk in set(expected) & set(observed) if expected[kk] != observed[kk]
        )
        if bad:
            lines.append(f"golden: MISMATCH at k = {', '.join(map(str, bad))}")
            status = EXIT_VIOLATION
        else:
            lines.append(f"golden: match ({len(expected)} rows)")
    _write("\n".join(lines) + "\n")
    return status


def cmd_verify(args) -> int:
    from .harness.catalog import catalog
    from .harness.report import render
    from .harness.sweep import sweep

    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else None
    config = RunConfig(
        command="verify",
        groups=tuple(args.group or ()),
        all_groups=args.all,
        checks=checks,
        workers=args.workers,
        output=args.output,
        fmt=args.format,
        cap=args.cap,
        max_gamma=args.max_gamma,
        backend=args.backend,
    )
    if config.all_groups == bool(config.groups):
        raise ConfigurationError("give exactly one of --group or --all")
    targets = [e.build() for e in catalog()] if config.all_groups else [
        load_group(src, config.cap) for src in config.groups
    ]
    reports = []
    for G in targets:
        cls = G.nilpotency_class
        if cls is not None and cls > config.max_gamma:
            raise ConfigurationError(f"{G.name}: class {cls} exceeds --max-gamma {config.max_gamma}")
        rep = sweep(G, checks=config.checks, workers=config.workers, backend=config.backend,
                    strict=not config.all_groups)
        if config.all_groups and config.checks is not None and not rep.checks:
            continue
        reports.append(rep)
    _write(render(reports, config.fmt), config.output)
    total = sum(len(r.violations) for r in reports)
    log.info("%d groups, %d violations", len(reports), total)
    return EXIT_OK if total == 0 else EXIT_VIOLATION


def cmd_catalog(args) -> int:
    from .harness.catalog import catalog

    lines = ["name\torder\tclass\tsweep\tdescription"]
    for e in catalog():
        cls = "-" if e.expected_class is None else str(e.expected_class)
        lines.append(f"{e.name}\t{e.expected_order}\t{cls}\t{e.sweep_mode}\t{e.description}")
    _write("\n".join(lines) + "\n")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilorder", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("order", help="order data for one pair of elements")
    o.add_argument("--group", required=True, help="catalog name or group spec file")
    o.add_argument("--a", required=True, help="first element")
    o.add_argument("--b", required=True, help="second element")
    o.add_argument("--cap", type=int, default=DEFAULT_CAP)
    o.set_defaults(func=cmd_order)

    h = sub.add_parser("hall", help="basic commutators, Hall polynomials and constants")
    h.add_argument("--class", dest="gamma", type=int, required=True)
    h.add_argument("--golden", help="golden lambda file to compare against")
    h.add_argument("--max-gamma", type=int, default=MAX_GAMMA)
    h.set_defaults(func=cmd_hall)

    v = sub.add_parser("verify", help="run verification sweeps")
    v.add_argument("--group", action="append", help="catalog name or spec file (repeatable)")
    v.add_argument("--all", action="store_true", help="sweep the whole catalog")
    v.add_argument("--checks", help="comma-separated check ids (default: all applicable)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--output", help="write the report here instead of stdout")
    v.add_argument("--format", choices=("text", "tsv"), default="text")
    v.add_argument("--cap", type=int, default=DEFAULT_CAP)
    v.add_argument("--max-gamma", type=int, default=MAX_GAMMA)
    v.add_argument("--backend", choices=("compiled", "python"), default=None)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="list the catalog groups")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UnknownGroup as exc:
        code, msg = EXIT_UNKNOWN_GROUP, str(exc)
    except (SpecFormatError, MembershipError, RepresentationMismatch) as exc:
        code, msg = EXIT_MALFORMED, str(exc)
    except GroupTooLarge as exc:
        code, msg = EXIT_TOO_LARGE, str(exc)
    except (ConfigurationError, DomainError, PreconditionError) as exc:
        code, msg = EXIT_USAGE, str(exc)
    except (TheoremViolation, InternalInconsistency) as exc:
        code, msg = EXIT_VIOLATION, f"theorem violation: {exc}"
    print(f"nilorder: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
