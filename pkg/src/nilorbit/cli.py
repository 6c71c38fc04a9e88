"""Command-line front end.

    nilorbit orbits --type D4
    nilorbit diagram --orbit "D4:[4,4]:I"
    nilorbit stability --type D4 --frobenius F1 --p 5 --q 25
    nilorbit action --type D4 --frobenius F2
    nilorbit closure --orbit "A3:[2,2]" --dot
    nilorbit frobenius --type E6
    nilorbit verify --n 3 --q 4 --map twisted

Every subcommand takes ``--json``. Exit status is 0 on success, 2 for
usage errors (bad flags, unparseable or invalid labels) and 1 when a
hypothesis fails (bad characteristic, unsupported type, budget).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetError,
    HypothesisError,
    InvalidLabelError,
    InvalidTypeError,
    NilorbitError,
    UnsupportedError,
)
from .frobenius import frobenius_classes, frobenius_descriptor, is_stable, orbit_action, rationality_report
from .orbits import closure, closure_poset, enumerate_orbit_labels, parse_label
from .roottypes import apply_automorphism, parse_type
from .wdd import WeightedDynkinDiagram, weighted_diagram


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(args, data, text_lines):
    if args.json:
        if isinstance(data, list) and args.command == "stability":
            for row in data:
                print(json.dumps(row))
        else:
            print(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_orbits(args):
    t = parse_type(args.type)
    labels = [str(x) for x in enumerate_orbit_labels(t)]
    _emit(args, {"type": str(t), "orbits": labels}, labels)


def cmd_diagram(args):
    label = parse_label(args.orbit)
    d = weighted_diagram(label)
    data = {"orbit": str(label), **d.to_json()}
    _emit(args, data, [f"{label}\t{','.join(map(str, d.labels))}"])


def _parse_diagram(t, text) -> WeightedDynkinDiagram:
    try:
        labels = [int(x) for x in text.replace("(", "").replace(")", "").split(",")]
    except ValueError:
        raise InvalidLabelError(f"cannot parse diagram {text!r}; expected comma separated labels") from None
    return WeightedDynkinDiagram(t, tuple(labels))


def cmd_stability(args):
    t = parse_type(args.type)
    f = frobenius_descriptor(t, args.frobenius)
    if args.diagram is not None:
        d = _parse_diagram(t, args.diagram)
        stable = is_stable(d, f)
        image = apply_automorphism(f.twist, d)
        row = {"diagram": d.to_json(), "frobenius": f.name, "stable": stable, "image": image.to_json()}
        _emit(args, row, [f"{d}\t{f.name}\tstable={_yes(stable)}\timage={image}"])
        return
    if args.p is None or args.q is None:
        raise InvalidLabelError("stability over orbit labels needs --p and --q (or pass --diagram)")
    rows = [r.to_json() for r in rationality_report(t, f, args.p, args.q)]
    lines = [
        "\t".join(
            [
                r["orbit"],
                r["frobenius"],
                f"stable={_yes(r['stable'])}",
                f"image={r['image']}",
                f"rational_point={_yes(r['rational_point'])}",
                f"p_ge_coxeter={_yes(r['p_ge_coxeter'])}",
            ]
        )
        for r in rows
    ]
    _emit(args, rows, lines)


def cmd_action(args):
    t = parse_type(args.type)
    f = frobenius_descriptor(t, args.frobenius)
    action = {str(k): str(v) for k, v in orbit_action(f).items()}
    data = {"type": str(t), "frobenius": f.name, "twist": f.twist.cycle_notation(), "action": action}
    _emit(args, data, [f"{k} -> {v}" for k, v in action.items()])


def cmd_closure(args):
    label = parse_label(args.orbit)
    if args.dot:
        sys.stdout.write(closure_poset(label.dynkin_type, top=label).to_dot(name=str(label)))
        return
    labels = [str(x) for x in closure(label)]
    _emit(args, {"orbit": str(label), "closure": labels}, labels)


def cmd_frobenius(args):
    t = parse_type(args.type)
    rows = [
        {"name": f.name, "twist": f.twist.cycle_notation(), "perm": list(f.twist.perm), "display": f.display}
        for f in frobenius_classes(t)
    ]
    _emit(args, {"type": str(t), "classes": rows}, [f"{r['name']}\t{r['twist']}\t{r['display']}" for r in rows])


def cmd_verify(args):
    from .oracle import fixed_point_census, verify_orbit_stability
    from .oracle.field import field_of_order

    F = field_of_order(args.q)
    report = verify_orbit_stability(args.n, F, args.map, budget=args.budget, workers=args.workers)
    data = report.to_json()
    if args.fixed_points:
        if F.k != 2:
            raise UnsupportedError("--fixed-points needs a field of order p^2")
        census = fixed_point_census(args.n, F.p)
        data["fixed_points"] = {str(k): v.tolist() for k, v in sorted(census.items(), reverse=True)}
    lines = [f"{k}: {json.dumps(v)}" for k, v in data.items()]
    _emit(args, data, lines)
    if not report.passed:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilorbit", description="Nilpotent orbits under Frobenius maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("orbits", cmd_orbits, "list orbit labels of a type A or D algebra")
    p.add_argument("--type", required=True)

    p = add("diagram", cmd_diagram, "weighted Dynkin diagram of an orbit")
    p.add_argument("--orbit", required=True)

    p = add("stability", cmd_stability, "F-stability and rational points of every orbit")
    p.add_argument("--type", required=True)
    p.add_argument("--frobenius", required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--diagram", help="check one user-supplied diagram instead, e.g. 2,0,0,0,0,2")

    p = add("action", cmd_action, "permutation of orbits induced by a Frobenius class")
    p.add_argument("--type", required=True)
    p.add_argument("--frobenius", required=True)

    p = add("closure", cmd_closure, "orbit closure (type A)")
    p.add_argument("--orbit", required=True)
    p.add_argument("--dot", action="store_true", help="Hasse diagram in Graphviz DOT")

    p = add("frobenius", cmd_frobenius, "Frobenius-Lie morphism classes of a type")
    p.add_argument("--type", required=True)

    p = add("verify", cmd_verify, "brute-force finite-field check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True, help="field order p or p^2")
    p.add_argument("--map", choices=["standard", "twisted"], default="standard")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--fixed-points", action="store_true", help="also list twisted-fixed representatives")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args) or 0
    except (HypothesisError, UnsupportedError, BudgetError) as exc:
        print(f"nilorbit {args.command}: {exc}", file=sys.stderr)
        return 1
    except (InvalidLabelError, InvalidTypeError, NilorbitError, ValueError) as exc:
        print(f"nilorbit {args.command}: usage error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
