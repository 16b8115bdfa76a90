"""Command-line interface.

Exit codes: 0 ok, 1 a verification suite failed, 2 usage or bad group
expression, 3 file errors, 4 an order bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .catalog import generate_catalog
from .cohomology import (
    DEFAULT_COHOMOLOGY_BOUND,
    build_extension,
    cocycle_space,
    is_split,
    preimage_order_profile,
    save_cocycle,
)
from .errors import BoundError, GroupSpecError, GroupValidationError, PreconditionError
from .groups import FiniteGroup, format_group, load_group, make_group
from .report import Report
from .spaceform import SpaceFormInstance, classify
from .suites import SUITES, run_suites

log = logging.getLogger("spaceform_psc")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_BOUND = 0, 1, 2, 3, 4


def _bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("true", "yes", "1"):
        return True
    if value in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spaceform-psc",
        description="Group-theoretic criteria for PSC metrics on topological spherical space forms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide the number of PSC path components for (n, G)")
    p.add_argument("-n", "--dimension", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-g", "--group", help="group expression, e.g. C3xQ8 or C7:C4@r6")
    src.add_argument("--group-file", type=Path, help="Cayley table file")
    p.add_argument("--alpha-vanishes", type=_bool, default=None, metavar="true|false")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--max-order", type=int, default=DEFAULT_COHOMOLOGY_BOUND,
                   help="order bound for the H^2 computation (default %(default)s)")

    p = sub.add_parser("verify", help="run the group-theoretic property suites over the catalog")
    p.add_argument("--max-order", type=int, default=24)
    p.add_argument("--suite", action="append", choices=sorted(SUITES), help="suite to run (repeatable; default all)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the main sweep")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--plot-dir", type=Path, help="write a timing figure here")

    p = sub.add_parser("h2", help="cocycle and coboundary dimensions of a group")
    p.add_argument("spec")
    p.add_argument("--max-order", type=int, default=DEFAULT_COHOMOLOGY_BOUND)
    p.add_argument("--dump-dir", type=Path, help="write each class representative as a cocycle file")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("extension-report", help="describe the central extension for one H^2 class")
    p.add_argument("spec")
    p.add_argument("class_index", type=int)
    p.add_argument("--max-order", type=int, default=DEFAULT_COHOMOLOGY_BOUND)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--plot-dir", type=Path, help="write Cayley-table and fiber-order figures here")

    p = sub.add_parser("catalog", help="list the bundled group families")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _group(args: argparse.Namespace) -> tuple[FiniteGroup, str]:
    if getattr(args, "group_file", None) is not None:
        G = load_group(args.group_file)
        return G, str(args.group_file)
    spec = args.group if hasattr(args, "group") else args.spec
    return make_group(spec), "".join(spec.split())


def cmd_classify(args: argparse.Namespace) -> int:
    G, name = _group(args)
    inst = SpaceFormInstance(args.dimension, G, args.alpha_vanishes)
    verdict = classify(inst, args.max_order)
    report = Report.from_verdict(inst, verdict, name)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suites(args.suite, args.max_order, args.jobs)
    if args.format == "json":
        rows = [
            {"suite": r.name, "passed": r.passed, "checked": r.checked,
             "elapsed": round(r.elapsed, 3), "failures": r.failures}
            for r in results
        ]
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'suite':<10}\t{'result':<6}\t{'checked':>7}\t{'elapsed':>8}")
        for r in results:
            print(f"{r.name:<10}\t{'PASS' if r.passed else 'FAIL':<6}\t{r.checked:>7}\t{r.elapsed:>7.2f}s")
            for msg in r.failures[:20]:
                print(f"    {msg}")
    if args.plot_dir is not None:
        from .plotting import plot_suite_summary

        path = plot_suite_summary([r.name for r in results], [r.elapsed for r in results],
                                  [r.passed for r in results], args.plot_dir / "verify.png")
        log.info("wrote %s", path)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_h2(args: argparse.Namespace) -> int:
    G = make_group(args.spec)
    space = cocycle_space(G, args.max_order)
    info = {
        "group": G.name,
        "order": G.order,
        "cocycle_dim": space.cocycle_dim,
        "coboundary_dim": space.coboundary_dim,
        "h2_dim": space.h2_dim,
        "classes": len(space.classes),
    }
    if args.dump_dir is not None:
        args.dump_dir.mkdir(parents=True, exist_ok=True)
        for cls in space.classes:
            save_cocycle(cls.representative, args.dump_dir / f"{G.name}_class{cls.index}.txt")
    if args.format == "json":
        print(json.dumps(info, indent=2))
    else:
        for key, value in info.items():
            print(f"{key}\t{value}")
    return EXIT_OK


def cmd_extension_report(args: argparse.Namespace) -> int:
    G = make_group(args.spec)
    space = cocycle_space(G, args.max_order)
    if not 0 <= args.class_index < len(space.classes):
        print(f"error: {G.name} has {len(space.classes)} classes (indices 0..{len(space.classes) - 1})",
              file=sys.stderr)
        return EXIT_USAGE
    cls = space.classes[args.class_index]
    E = build_extension(G, cls)
    profile = preimage_order_profile(E)
    split = is_split(G, cls.representative, args.max_order)
    if args.format == "json":
        print(json.dumps({
            "group": G.name,
            "class_index": cls.index,
            "split": split,
            "total_order": E.total.order,
            "z": E.total.label(E.z),
            "labels": list(E.total.labels),
            "table": E.total.table.tolist(),
            "fiber_orders": {G.label(g): list(v) for g, v in profile.items()},
        }, indent=2))
    else:
        print(f"# extension of {G.name} by Z2, class {cls.index} ({'split' if split else 'non-split'})")
        print(f"# z = {E.total.label(E.z)} (index {E.z}); element (eps,g) has index 2*g+eps")
        sys.stdout.write(format_group(E.total))
        print("# fiber orders")
        for g, (a, b) in profile.items():
            print(f"{G.label(g)}\t{int(G.element_orders[g])}\t{a}\t{b}")
    if args.plot_dir is not None:
        from .plotting import plot_cayley_table, plot_fiber_orders

        stem = f"{G.name}_class{cls.index}"
        plot_cayley_table(E.total, args.plot_dir / f"{stem}_table.png", f"extension of {G.name}, class {cls.index}")
        plot_fiber_orders(E, args.plot_dir / f"{stem}_fibers.png")
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    entries = generate_catalog(args.max_order)
    if args.format == "json":
        print(json.dumps([{"spec": e.spec, "order": e.order, "tags": sorted(e.tags)} for e in entries], indent=2))
    else:
        for e in entries:
            print(f"{e.order}\t{e.spec}\t{','.join(sorted(e.tags))}")
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "verify": cmd_verify,
    "h2": cmd_h2,
    "extension-report": cmd_extension_report,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (GroupSpecError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GroupValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
