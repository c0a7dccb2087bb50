"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from contextlib import contextmanager
from pathlib import Path

from .algebra import algebra_betti, parse_algebra
from .cohomology import field_cross_check, multipath_betti
from .digraph import Digraph, from_document
from .errors import MultipathError, SizeLimitExceeded
from .euler import ALPHA, chi_alpha, graded_euler
from .families import parse_family
from .linalg import FieldSpec
from .linear import linear_from_word
from .poset import SIZE_CAP_ENV, enumerate_path_poset, flat_dump, hasse_export, level_counts
from .polynomial import LaurentPolynomial
from .simplicial import build_multipath_complex, export_complex, verify_shift_isomorphism
from .suites import SUITES

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def parse_graph_file(path: str | Path) -> Digraph:
    p = Path(path)
    if not p.exists():
        raise InputError(f"{p}: no such file")
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return from_document(doc)
    except ValueError as exc:
        raise InputError(f"{p}: {type(exc).__name__}: {exc}") from None


def _graph(args) -> Digraph:
    given = [x for x in (args.graph, args.family, args.word) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --graph, --family or --word")
    if args.graph is not None:
        return parse_graph_file(args.graph)
    if args.family is not None:
        return parse_family(args.family)
    return linear_from_word(args.word)


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except ValueError as exc:
        raise InputError(f"bad field {args.field!r}: {exc}") from None


def factored(poly: LaurentPolynomial) -> str:
    """Factor a polynomial in alpha over the integers."""
    import sympy
    a = sympy.Symbol("a")
    expr = sum(c * a ** k for k, c in poly.coefficients.items())
    text = str(sympy.factor(expr)) if expr != 0 else "0"
    return text.replace("**", "^").replace("a", ALPHA)


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_cohomology(args) -> int:
    g = _graph(args)
    if args.algebra:
        a = parse_algebra(args.algebra)
        table = algebra_betti(g, a)
        coeff = a.name
    else:
        f = _field(args)
        table = multipath_betti(g, f, args.size_cap)
        coeff = str(f)
        if args.cross_check:
            field_cross_check(g)
    if args.format == "csv":
        out = table.to_csv()
    elif args.format == "json":
        out = _json({"coefficients": coeff, "betti": {str(k): v for k, v in table.support.items()},
                     "euler": table.euler})
    else:
        out = f"coefficients: {coeff}\n" + table.to_text()
    sys.stdout.write(out)
    return EXIT_OK


def cmd_poset(args) -> int:
    g = _graph(args)
    p = enumerate_path_poset(g, args.size_cap)
    counts = level_counts(p)
    if args.format == "dot":
        out = hasse_export(p)
    elif args.format == "json":
        out = _json({"level_counts": counts, "masks": list(p.masks),
                     "covers": [list(c) for c in p.covers]})
    elif args.format == "csv":
        out = "level,count\n" + "".join(f"{k},{c}\n" for k, c in enumerate(counts))
    else:
        out = f"level counts: {counts}\n" + flat_dump(p)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_simplicial(args) -> int:
    g = _graph(args)
    f = _field(args)
    x = build_multipath_complex(g, args.size_cap)
    rep = verify_shift_isomorphism(g, f)
    if args.format == "json":
        out = _json({"facets": [[x.vertex_labels[v] for v in s] for s in x.facets],
                     "reduced_betti": {str(k): v for k, v in rep.simplicial.support.items()},
                     "multipath_betti": {str(k): v for k, v in rep.multipath.support.items()},
                     "shift_ok": rep.ok, "mismatched_degrees": list(rep.mismatches)})
    else:
        out = "facets:\n" + export_complex(x)
        out += f"reduced simplicial betti: {rep.simplicial.support}\n"
        out += f"multipath betti:          {rep.multipath.support}\n"
        out += "shift isomorphism: " + ("ok" if rep.ok else f"MISMATCH in degrees {list(rep.mismatches)}") + "\n"
    sys.stdout.write(out)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_euler(args) -> int:
    g = _graph(args)
    in_alpha = chi_alpha(g)
    q_form = None
    if args.algebra:
        q_form = graded_euler(g, parse_algebra(args.algebra))
    if args.format == "json":
        doc = {"alpha": str(in_alpha), "factored": factored(in_alpha)}
        if q_form is not None:
            doc["q"] = str(q_form)
        out = _json(doc)
    else:
        out = ""
        if q_form is not None:
            out += f"chi_gr(q) = {q_form}\n"
        out += f"chi_gr(α) = {in_alpha}\n"
        out += f"factored  = {factored(in_alpha)}\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    f = _field(args)
    ok = True
    results = []
    for name in names:
        fn = SUITES[name]
        params = inspect.signature(fn).parameters
        kw = {}
        if "f" in params:
            kw["f"] = f
        if "seed" in params and args.seed is not None:
            kw["seed"] = args.seed
        if "max_n" in params and args.max is not None:
            kw["max_n"] = args.max
        res = fn(**kw)
        ok &= res.ok
        results.append(res)
    if args.format == "json":
        sys.stdout.write(_json([{"suite": r.name, "ok": r.ok,
                                 "checks": [{"check": c, "ok": o, "detail": d} for c, o, d in r.checks]}
                                for r in results]))
    else:
        for r in results:
            sys.stdout.write(r.to_text())
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_family(args) -> int:
    spec = args.spec if args.spec is not None else args.family
    if spec is None:
        raise InputError("give a family spec such as dandelion:3,2")
    g = parse_family(spec)
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
    else:
        sys.stdout.write(_json(g.to_document()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multipath", description="Multipath cohomology of directed graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, formats, graph=True):
        if graph:
            p.add_argument("--graph", help="JSON graph file")
            p.add_argument("--family", help="family spec, e.g. dandelion:3,2")
            p.add_argument("--word", help="orientation word over R and L")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--size-cap", type=int, default=None,
                       help=f"maximum number of multipaths (env {SIZE_CAP_ENV})")

    p = sub.add_parser("cohomology", help="Betti numbers")
    common(p, ["text", "csv", "json"])
    p.add_argument("--field", default="Q", help="Q or a prime p (also F_p)")
    p.add_argument("--algebra", help="dual-numbers, dual-numbers-2, field, diagonal:r or a JSON file")
    p.add_argument("--cross-check", action="store_true", help="warn if F_2, F_3, F_101 disagree")
    p.set_defaults(run=cmd_cohomology)

    p = sub.add_parser("poset", help="path poset levels and Hasse diagram")
    common(p, ["text", "dot", "csv", "json"])
    p.set_defaults(run=cmd_poset)

    p = sub.add_parser("simplicial", help="multipath complex facets and shift check")
    common(p, ["text", "json"])
    p.add_argument("--field", default="Q")
    p.set_defaults(run=cmd_simplicial)

    p = sub.add_parser("euler", help="graded Euler characteristic")
    common(p, ["text", "json"])
    p.add_argument("--algebra", help="graded algebra for the q form")
    p.set_defaults(run=cmd_euler)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    common(p, ["text", "json"], graph=False)
    p.add_argument("--field", default="Q")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max", type=int, default=None, help="largest size for sweeping suites")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("family", help="print a family graph as a graph document")
    p.add_argument("spec", nargs="?", help="family spec, e.g. polygon:3")
    p.add_argument("--family", help=argparse.SUPPRESS)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(run=cmd_family)
    return parser


@contextmanager
def _size_cap(cap: int | None):
    if cap is None:
        yield
        return
    old = os.environ.get(SIZE_CAP_ENV)
    os.environ[SIZE_CAP_ENV] = str(cap)
    try:
        yield
    finally:
        if old is None:
            os.environ.pop(SIZE_CAP_ENV, None)
        else:
            os.environ[SIZE_CAP_ENV] = old


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = getattr(args, "size_cap", None)
    try:
        with _size_cap(cap):
            return args.run(args)
    except SizeLimitExceeded as exc:
        print(f"error: size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, MultipathError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
