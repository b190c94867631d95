"""Command-line front end.

Exit codes: 0 success, 1 validation failure (or unreadable input),
2 a law failed, 64 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import formats
from .complexes import CellComplex, CellMap, is_valid, solve_chain_maps, validate_complex, validate_map
from .errors import EquilefError, ValidationError
from .groups import FiniteGroup, element_classes
from .invariants import analytical_lefschetz, decompose, fixed_orbit_report, homological_lefschetz
from .laws import run_all

EXIT_OK, EXIT_INVALID, EXIT_LAW, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_group(arg):
    if os.path.exists(arg):
        obj = formats.load(arg)
        if isinstance(obj, CellComplex):
            return obj.group
        if isinstance(obj, CellMap):
            return obj.group
        if isinstance(obj, FiniteGroup):
            return obj
        raise EquilefError(f"{arg} does not name a group")
    from .library import by_name

    try:
        return by_name(arg)
    except (KeyError, ValueError):
        raise EquilefError(f"{arg}: no such file or library group") from None


def _load_map(path, validate=True):
    obj = formats.load(path)
    if not isinstance(obj, CellMap):
        raise EquilefError(f"{path} is not a map document")
    if validate:
        validate_complex(obj.domain)
        validate_map(obj)
    if not obj.is_self_map():
        raise EquilefError(f"{path}: invariants need a self-map (domain = codomain)")
    return obj


def _invalid(exc):
    where = getattr(exc, "where", None)
    return f"invalid: entry {where}: {exc}\n" if where is not None else f"invalid: {exc}\n"


def _set(G, elements):
    return "{" + ", ".join(G.names[x] for x in elements) + "}"


def cmd_info(args, out):
    G = _load_group(args.group)
    out.write(f"order {G.order}\n")
    out.write(f"elements {' '.join(G.names)}\n")
    classes = G.subgroup_classes()
    out.write(f"subgroup classes {len(classes)}\n")
    for cls in classes:
        H = cls.representative
        W = G.weyl(H)
        cc = element_classes(W.quotient)
        co = " ".join("[" + W.quotient.names[c[0]] + "]" for c in cc.classes)
        out.write(
            f"({cls.label}) order {H.order} conjugates {len(cls.members)} rep {_set(G, H.elements)}"
            f" |N| {G.normalizer(H).order} |W| {W.order} Co {co}\n"
        )
    return EXIT_OK


def cmd_validate(args, out):
    obj = formats.load(args.file)
    maps = obj if isinstance(obj, list) else [obj]
    try:
        for x in maps:
            if isinstance(x, CellMap):
                validate_complex(x.domain)
                validate_complex(x.codomain)
                validate_map(x)
            elif isinstance(x, CellComplex):
                validate_complex(x)
    except ValidationError as exc:
        out.write(_invalid(exc))
        return EXIT_INVALID
    kind = type(obj).__name__ if not isinstance(obj, list) else "suite"
    out.write(f"valid {dict(FiniteGroup='group', CellComplex='complex', CellMap='map').get(kind, kind)}\n")
    return EXIT_OK


def cmd_lefschetz(args, out):
    f = _load_map(args.map)
    if args.method in ("hom", "both"):
        out.write(f"{homological_lefschetz(f)}\n")
    if args.method in ("an", "both") or args.table:
        L, table = analytical_lefschetz(f)
        if args.method in ("an", "both"):
            out.write(f"{L}\n")
        if args.table:
            for r in table.rows:
                out.write(f"({r.subgroup_class.label}) L>= {r.L_geq} L> {r.L_gt} i {r.i_H}\n")
            out.write(f"i_G = {table.unreduced()}\n")
    return EXIT_OK


def format_decomposition(parts):
    nonzero = [f"{v} at ({k.label})" for k, v in parts.items() if v]
    if not nonzero:
        return "0"
    if len(nonzero) < len(parts):
        nonzero.append("0 elsewhere")
    return "; ".join(nonzero)


def cmd_decompose(args, out):
    f = _load_map(args.map)
    out.write(format_decomposition(decompose(f)) + "\n")
    return EXIT_OK


def cmd_report(args, out):
    f = _load_map(args.map)
    for line in fixed_orbit_report(f).lines():
        out.write(line + "\n")
    return EXIT_OK


def cmd_solve(args, out):
    doc = formats.parse(args.complex)
    C = doc.obj
    if not isinstance(C, CellComplex):
        raise EquilefError(f"{args.complex} is not a complex document")
    validate_complex(C)
    maps = solve_chain_maps(C, args.bound, args.count, args.seed)
    os.makedirs(args.out, exist_ok=True)
    ref = os.path.relpath(os.path.abspath(args.complex), os.path.abspath(args.out))
    stem = os.path.basename(args.complex).split(".")[0]
    width = len(str(max(len(maps) - 1, 0)))
    for k, f in enumerate(maps):
        path = os.path.join(args.out, f"{stem}_{k:0{width}d}.map")
        formats.write(path, formats.map_body(f, ref, ref))
    out.write(f"{len(maps)} maps written to {args.out}\n")
    return EXIT_OK


def cmd_axioms(args, out):
    maps = []
    for path in args.maps:
        obj = formats.load(path)
        items = obj if isinstance(obj, list) else [obj]
        for f in items:
            if not isinstance(f, CellMap):
                raise EquilefError(f"{path} is not a map or suite document")
            if not (is_valid(f.domain) and is_valid(f)):
                out.write(f"invalid: {path}\n")
                return EXIT_INVALID
            if not f.is_self_map():
                raise EquilefError(f"{path}: laws are checked on self-maps")
            maps.append(f)
    results = run_all(maps)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.ok for r in results)
    out.write(f"{len(results) - failed} passed, {failed} failed\n")
    return EXIT_LAW if failed else EXIT_OK


def build_parser():
    p = _Parser(prog="equilef", description="Equivariant Lefschetz invariants of cellular self-maps.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="subgroup classes, Weyl groups and their conjugacy classes")
    s.add_argument("group", help="group/complex/map file, or a library name such as S3 or D4")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("validate", help="check a complex, map or suite")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("lefschetz", help="equivariant Lefschetz number of a self-map")
    s.add_argument("map")
    s.add_argument("--method", choices=("hom", "an", "both"), default="both")
    s.add_argument("--table", action="store_true", help="also print the unreduced fixed orbit index table")
    s.set_defaults(func=cmd_lefschetz)

    s = sub.add_parser("decompose", help="components in the Weyl group class rings")
    s.add_argument("map")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("report", help="fixed orbits forced by the Lefschetz number")
    s.add_argument("map")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("solve", help="enumerate chain self-maps with bounded coefficients")
    s.add_argument("complex")
    s.add_argument("--bound", type=int, default=1)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("axioms", help="check every applicable law on the given maps")
    s.add_argument("maps", nargs="+")
    s.set_defaults(func=cmd_axioms)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "bound", 0) < 0 or getattr(args, "count", 0) < 0:
        print("equilef: error: --bound and --count must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except ValidationError as exc:
        out.write(_invalid(exc))
        return EXIT_INVALID
    except EquilefError as exc:
        print(f"equilef: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
