"""Command-line front end.

Subcommands: criterion, decide, klein, diagram, invariants.
Exit codes: 0 yes/success, 1 no, 2 usage or input error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decide import DecisionReport, decide, klein_scan
from .diagram import DiagramError, PlanarDiagram
from .invariants import (alexander_polynomial, determinant, jones_in_t,
                         jones_polynomial)
from .lens import LensError, canonical_form
from .residues import psi_phi
from .schubert import Mode, SchubertDiagram, SchubertError
from .unknot import SearchBudget

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_EXIT_BY_VERDICT = {"yes": EXIT_YES, "no": EXIT_NO,
                    "inconclusive": EXIT_INCONCLUSIVE}


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(max_nodes=args.max_nodes,
                            headroom=args.headroom,
                            jones_cap=args.jones_cap)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _report_text(report: DecisionReport) -> str:
    lens, canon = report.lens, report.canonical
    lines = [f"L({lens.p},{lens.q})  canonical q = {canon.q}"]
    for r in report.per_u:
        if not r.criterion_passes:
            lines.append(f"  u={r.u}: value={r.value} criterion fail")
            continue
        extra = f" via {r.witness_mode}" if r.witness_mode else ""
        lines.append(f"  u={r.u}: value={r.value} criterion pass"
                     f" -> {r.status}{extra}")
    lines.append(f"obtainable: {report.obtainable}")
    lines.append("witnesses: " + (" ".join(map(str, report.witnesses))
                                  or "(none)"))
    lines.append(f"calibration: {report.calibration_id}")
    return "\n".join(lines) + "\n"


def cmd_criterion(args) -> int:
    try:
        canonical_form(args.p, args.q)
        psi, phi = psi_phi(args.p, args.q, args.u)
    except (ValueError, LensError) as exc:
        if "coprime to p" in str(exc):
            print(f"u={args.u}: fail (non-coprime)")
            return EXIT_NO
        return _usage_error(str(exc))
    value = args.p * phi - args.u * psi
    passes = value in (1, -1, 1 - args.p, -1 - args.p)
    print(f"psi={psi} phi={phi} value={value} "
          f"{'pass' if passes else 'fail'}")
    return EXIT_YES if passes else EXIT_NO


def cmd_decide(args) -> int:
    try:
        report = decide(args.p, args.q, _budget(args))
    except (LensError, ValueError) as exc:
        return _usage_error(str(exc))
    text = (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
            if args.json else _report_text(report))
    _write(text, args.output)
    return _EXIT_BY_VERDICT[report.obtainable]


def cmd_klein(args) -> int:
    try:
        reports = klein_scan(args.n_min, args.n_max, _budget(args))
    except (LensError, ValueError) as exc:
        return _usage_error(str(exc))
    if args.json:
        text = json.dumps([r.to_dict() for r in reports],
                          indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        yes = []
        for n, report in zip(range(args.n_min, args.n_max + 1), reports):
            lens = report.lens
            wit = ",".join(map(str, report.witnesses)) or "-"
            lines.append(f"n={n:3d}  L({lens.p},{lens.q})  "
                         f"{report.obtainable:12s}  witnesses: {wit}")
            if report.obtainable == "yes":
                yes.append(f"L({lens.p},{lens.q})")
        lines.append("yes-set: " + (" ".join(yes) or "(empty)"))
        text = "\n".join(lines) + "\n"
    _write(text, args.output)
    if any(r.obtainable == "inconclusive" for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_YES


def cmd_diagram(args) -> int:
    if args.raw == (args.u is not None):
        return _usage_error("give a wedge index u, or --raw, not both")
    try:
        sch = SchubertDiagram(args.p, args.q)
        if args.raw:
            out = sch.diagram
        else:
            out = sch.modify(args.u, Mode(args.mode))
    except (SchubertError, LensError, DiagramError, ValueError) as exc:
        return _usage_error(str(exc))
    _write(out.normalized().to_text(), args.output)
    return EXIT_YES


def cmd_invariants(args) -> int:
    try:
        with open(args.file) as fh:
            d = PlanarDiagram.from_text(fh.read())
    except (OSError, DiagramError) as exc:
        return _usage_error(str(exc))
    print(f"crossings: {d.crossing_count}")
    print(f"components: {d.component_count}")
    print(f"determinant: {determinant(d)}")
    print(f"alexander: {alexander_polynomial(d)}")
    if d.crossing_count <= args.jones_cap:
        f = jones_polynomial(d)
        terms = " ".join(f"{c:+d}*t^({e})" for e, c in jones_in_t(f).items())
        print(f"kauffman_jones[A]: {f}")
        print(f"jones[t]: {terms}")
    else:
        print(f"jones: skipped (more than {args.jones_cap} crossings)")
    return EXIT_YES


def _add_budget_flags(sub) -> None:
    sub.add_argument("--max-nodes", type=int, default=30000,
                     help="search node cap (default 30000)")
    sub.add_argument("--headroom", type=int, default=2,
                     help="crossing headroom for bigon insertions")
    sub.add_argument("--jones-cap", type=int, default=16,
                     help="largest diagram the Jones filter is run on")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lensurgery",
        description="Decide whether a lens space arises from surgery "
                    "along the surface slope of a doubly primitive knot.")
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("criterion", help="residue filter for one u")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.add_argument("u", type=int)
    c.set_defaults(fn=cmd_criterion)

    c = subs.add_parser("decide", help="full decision for L(p,q)")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.add_argument("--json", action="store_true")
    c.add_argument("-o", "--output", default=None)
    _add_budget_flags(c)
    c.set_defaults(fn=cmd_decide)

    c = subs.add_parser("klein",
                        help="decide the Klein-bottle spaces L(4n,2n-1)")
    c.add_argument("n_min", type=int)
    c.add_argument("n_max", type=int)
    c.add_argument("--json", action="store_true")
    c.add_argument("-o", "--output", default=None)
    _add_budget_flags(c)
    c.set_defaults(fn=cmd_klein)

    c = subs.add_parser("diagram", help="emit a pillowcase diagram")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.add_argument("u", type=int, nargs="?", default=None)
    c.add_argument("--raw", action="store_true",
                   help="emit the unmodified diagram")
    c.add_argument("--mode", default="smoothing",
                   choices=[m.value for m in Mode])
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(fn=cmd_diagram)

    c = subs.add_parser("invariants", help="invariants of a PD file")
    c.add_argument("file")
    c.add_argument("--jones-cap", type=int, default=16)
    c.set_defaults(fn=cmd_invariants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
