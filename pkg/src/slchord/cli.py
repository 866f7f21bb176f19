"""Command-line front end.  Exit status: 0 success, 1 check failed, 2 bad input."""

from __future__ import annotations

import argparse
import sys

from .diagram import (
    ParseError,
    canonical_text,
    connected_components,
    diagram_coproduct,
    parse_diagram,
    stack_product,
)
from .enumerate import enumerate_diagrams
from .gf2 import adjacency_matrix, gf2_det, gf2_rank, parse_matrix
from .graph import graph_text, intersection_graph, is_semisymmetric, label_parity_ok, to_dot
from .harness import SUITES, find_adjacency_collisions, run_suite
from .relations import NormalFormError, normal_form
from .surgery import components_after_surgery, conway_weight, homfly_weight


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _diagram(path: str):
    return parse_diagram(_read(path))


def cmd_validate(args, out) -> int:
    d = _diagram(args.file)
    parts = connected_components(d)
    g = intersection_graph(d)
    out.write(f"ok strands={d.k} chords={d.n} components={len(parts.blocks)}\n")
    out.write(f"label-parity={'ok' if label_parity_ok(g) else 'FAIL'} ")
    out.write(f"semisymmetric={'yes' if is_semisymmetric(g) else 'no'}\n")
    return 0


def cmd_graph(args, out) -> int:
    g = intersection_graph(_diagram(args.file))
    out.write((to_dot(g) if args.dot else graph_text(g)) + "\n")
    return 0


def cmd_adj(args, out) -> int:
    m = adjacency_matrix(intersection_graph(_diagram(args.file)))
    if m.n:
        out.write(m.text() + "\n")
    out.write(f"rank={gf2_rank(m)} det={gf2_det(m)}\n")
    return 0


def cmd_conway(args, out) -> int:
    out.write(f"{conway_weight(_diagram(args.file))}\n")
    return 0


def cmd_homfly(args, out) -> int:
    d = _diagram(args.file)
    out.write(f"{homfly_weight(d)}\n")
    out.write(f"components={components_after_surgery(d)}\n")
    return 0


def cmd_normal_form(args, out) -> int:
    d = _diagram(args.file)
    try:
        nf, trace, summary = normal_form(d)
    except NormalFormError as exc:
        out.write(f"normal form failed: {exc}\n")
        return 1
    out.write(canonical_text(nf) + "\n")
    out.write(summary.text() + "\n")
    if args.trace:
        out.write(f"moves={len(trace)}\n")
        if len(trace):
            out.write(trace.text() + "\n")
    return 0


def cmd_product(args, out) -> int:
    out.write(canonical_text(stack_product(_diagram(args.left), _diagram(args.right))) + "\n")
    return 0


def cmd_coproduct(args, out) -> int:
    out.write(diagram_coproduct(_diagram(args.file)).render() + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    if args.strands < 1 or args.chords < 0:
        raise InputError("need --strands >= 1 and --chords >= 0")
    for d in enumerate_diagrams(args.strands, args.chords, args.connected):
        out.write(canonical_text(d).replace("\n", " / ") + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise InputError(f"unknown suite {args.suite!r}")
    if (args.strands is not None and args.strands < 1) or (
        args.max_chords is not None and args.max_chords < 0
    ):
        raise InputError("need --strands >= 1 and --max-chords >= 0")
    rep = run_suite(args.suite, args.strands, args.max_chords)
    out.write(rep.text() + "\n")
    return 0 if rep.passed else 1


def cmd_collide(args, out) -> int:
    if args.strands < 1 or args.chords < 1:
        raise InputError("need --strands >= 1 and --chords >= 1")
    if args.matrix is not None:
        try:
            target = parse_matrix(_read(args.matrix))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if target.n != args.chords:
            raise InputError(f"matrix has order {target.n}, expected {args.chords}")
    else:
        target = None
    found = find_adjacency_collisions(args.strands, args.chords, target)
    ones = [d for d, c in found if c == 1]
    zeros = [d for d, c in found if c == 0]
    mode = "target" if target is not None else "classes"
    out.write(
        f"collide k={args.strands} n={args.chords} mode={mode} "
        f"matches={len(found)} conway1={len(ones)} conway0={len(zeros)}\n"
    )
    for label, group in (("C=1", ones), ("C=0", zeros)):
        if group:
            out.write(f"{label} example: {canonical_text(group[0]).replace(chr(10), ' / ')}\n")
    collision = bool(ones and zeros)
    out.write(f"collision={'yes' if collision else 'no'}\n")
    # a target scan expects a collision; a class scan expects none
    return 0 if collision == (target is not None) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slchord", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="diagram file, or - for standard input")
        sp.set_defaults(func=fn)
        return sp

    with_file("validate", cmd_validate, "parse a diagram and report its invariants")
    with_file("graph", cmd_graph, "print the intersection graph").add_argument(
        "--dot", action="store_true", help="emit DOT instead of graph text"
    )
    with_file("adj", cmd_adj, "print the adjacency matrix with its rank and determinant")
    with_file("conway", cmd_conway, "print the Conway weight")
    with_file("homfly", cmd_homfly, "print the Homfly weight")
    with_file("normal-form", cmd_normal_form, "reduce by slides to normal form").add_argument(
        "--trace", action="store_true", help="also print the slide moves"
    )
    sp = sub.add_parser("product", help="stack two diagrams")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_product)
    with_file("coproduct", cmd_coproduct, "print the coproduct as a formal sum")

    sp = sub.add_parser("enumerate", help="list every diagram of a given size")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--chords", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run an exhaustive verification suite")
    sp.add_argument("--suite", required=True, help=", ".join([*SUITES, "all"]))
    sp.add_argument("--strands", type=int)
    sp.add_argument("--max-chords", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("collide", help="search for adjacency matrices shared by different Conway values")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--chords", type=int, required=True)
    sp.add_argument("--matrix", help="0/1 matrix file, or - for standard input")
    sp.set_defaults(func=cmd_collide)
    return p


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, ParseError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
