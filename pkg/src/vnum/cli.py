"""Command-line frontend.

Exit status: 0 on success, 1 on unreadable input or bad usage, 2 when a size guard
refuses the input, 3 when ``suite`` reports a failing check.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import __version__
from .complex import SimplicialComplex, alexander_dual, structural_flags
from .errors import GuardError, ParseError
from .families import (
    bight_example,
    nerve_counterexample,
    range_complex,
    rp2,
    triangle_plus_point,
    vwc_expansion,
)
from .graphs import Graph, c_line, c_nerve, cover_ideal, edge_ideal, graph_from_edges, multi_whisker
from .homology import check_field, classify, hochster_betti
from .ideals import (
    MonomialIdeal,
    SquarefreeIdeal,
    complex_of_ideal,
    dual_ideal,
    ideal_invariants,
    stanley_reisner_ideal,
)
from .io import complex_to_json, format_edges, format_facets, format_ideal, graph_to_json, ideal_to_json, load
from .localcoh import depth_symbolic, lc_report, serre_depth
from .suite import SUITES, run_all
from .vnumber import v_number

EXIT_OK, EXIT_PARSE, EXIT_GUARD, EXIT_SUITE = 0, 1, 2, 3
FAMILIES = ("rp2", "multi-whisker", "vwc-expansion", "range", "bight-example", "example-8-4", "example-5-12")


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(data: dict, as_json: bool, text: str | None = None) -> None:
    if as_json:
        sys.stdout.write(json.dumps(_jsonable(data), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write((text if text is not None else _plain(data)) + "\n")


def _plain(data: dict, indent: str = "") -> str:
    lines = []
    for k, v in data.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_plain(v, indent + "  "))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{indent}{k}:")
            lines += [indent + "  - " + ", ".join(f"{a}={_jsonable(b)}" for a, b in x.items()) for x in v]
        else:
            lines.append(f"{indent}{k}: {_jsonable(v)}")
    return "\n".join(x for x in lines if x)


def _load_input(args) -> SimplicialComplex | SquarefreeIdeal | MonomialIdeal | Graph:
    if not args.input:
        raise ParseError("--input is required")
    obj = load(args.input, args.kind)
    if args.cap_n is not None and len(obj.labels) > args.cap_n:
        raise GuardError("input vertices (--cap-n)", args.cap_n, len(obj.labels))
    return obj


def _squarefree(obj, cover: bool = False) -> SquarefreeIdeal:
    """The ideal a command works on: I_Delta, the ideal itself, or I(G) / J(G)."""
    if isinstance(obj, SimplicialComplex):
        return stanley_reisner_ideal(obj)
    if isinstance(obj, Graph):
        return cover_ideal(obj) if cover else edge_ideal(obj)
    if isinstance(obj, MonomialIdeal):
        raise ParseError("this command needs a squarefree ideal")
    return obj


def _complex_of(obj, cover: bool = False) -> SimplicialComplex:
    if isinstance(obj, SimplicialComplex):
        return obj
    return complex_of_ideal(_squarefree(obj, cover))


def cmd_dual(args) -> None:
    obj = _load_input(args)
    if isinstance(obj, SimplicialComplex):
        d = alexander_dual(obj)
        _emit(complex_to_json(d), args.json, format_facets(d).rstrip("\n"))
    else:
        j = dual_ideal(_squarefree(obj))
        _emit(ideal_to_json(j), args.json, format_ideal(j).rstrip("\n"))


def cmd_v(args) -> None:
    obj = _load_input(args)
    ideal = _squarefree(obj, args.cover)
    report = v_number(ideal).to_dict(ideal.labels)
    if isinstance(obj, Graph) and not args.cover:
        report["c_line"] = c_line(obj)
        report["c_nerve"] = c_nerve(obj)
    lines = [f"v = {report['v']}"]
    for w in report["per_prime"]:
        lines.append(f"  P = ({', '.join('x' + x for x in w['prime'])}): v_P = {w['value']}, "
                     f"witness {'*'.join('x' + x for x in w['witness']) or '1'}")
    lines.append("per height: " + ", ".join(f"{h}:{val}" for h, val in report["per_height"].items()))
    for key in ("c_line", "c_nerve"):
        if key in report:
            lines.append(f"{key} = {report[key]}")
    _emit(report, args.json, "\n".join(lines))


def cmd_betti(args) -> None:
    obj = _load_input(args)
    table = hochster_betti(_squarefree(obj, args.cover), args.char)
    text = table.to_text() + f"\nreg S/I = {table.reg}, pd = {table.pd}, depth = {table.depth} (char {args.char})"
    _emit(table.to_dict(), args.json, text)


def cmd_depth(args) -> None:
    obj = _load_input(args)
    ideal = _squarefree(obj, args.cover)
    if args.ell == 1 and not args.verbose:
        report = {"ell": 1, "char": args.char, "depth": hochster_betti(ideal, args.char).depth,
                  "depth_local_cohomology": depth_symbolic(ideal, 1, args.char)}
    else:
        report = lc_report(ideal, args.ell, args.char, args.r)
    _emit(report, args.json, f"depth S/I^({args.ell}) = {report['depth']} (char {args.char})"
          if not args.verbose else None)


def cmd_serre(args) -> None:
    obj = _load_input(args)
    ideal = _squarefree(obj, args.cover)
    try:
        value = serre_depth(ideal, args.ell, args.r, args.char)
    except ValueError as exc:
        raise ParseError(str(exc), args.input) from None
    report = {"ell": args.ell, "r": args.r, "char": args.char, "serre_depth": value}
    _emit(report, args.json, f"S_{args.r}-depth S/I^({args.ell}) = {value} (char {args.char})")


def cmd_classify(args) -> None:
    obj = _load_input(args)
    delta = _complex_of(obj, args.cover)
    if not delta.is_proper:
        raise ParseError(f"classification needs a proper complex, got {delta.kind}", args.input)
    flags = structural_flags(delta)
    betti = hochster_betti(delta, args.char)
    cls = classify(delta, args.char, betti)
    inv = ideal_invariants(stanley_reisner_ideal(delta))
    report = {
        "char": args.char,
        "dim": int(flags.dim) + 1,
        "height": inv.height,
        "big_height": inv.big_height,
        "arith_degree": inv.arith_degree,
        "initial_degree": inv.initial_degree,
        "pure": flags.is_pure,
        "2_pure": flags.is_2_pure,
        "matroid": flags.is_matroid,
        "diameter": flags.diameter,
        "free_vertices": {"".join(delta.names(f)) if delta.n < 10 else "|".join(delta.names(f)):
                          delta.names(m) for f, m in flags.free_vertex_map.items()},
        "cohen_macaulay": cls.is_CM,
        "2_cohen_macaulay": cls.is_2CM,
        "level": cls.is_level,
        "gorenstein": cls.is_gorenstein,
        "sequentially_cohen_macaulay": cls.is_seq_CM,
        "reg": betti.reg,
        "depth": betti.depth,
    }
    _emit(report, args.json)


def _ints(params: Sequence[str], k: int, family: str) -> list[int]:
    try:
        vals = [int(x) for x in params]
    except ValueError:
        raise ParseError(f"{family} takes integer parameters") from None
    if k >= 0 and len(vals) != k:
        raise ParseError(f"{family} takes {k} parameters, got {len(vals)}")
    return vals


def _edges_param(spec: str) -> Graph:
    """``1-2,2-3`` or a bare vertex count such as ``3`` (no edges)."""
    if spec.isdigit():
        n = int(spec)
        labels = [str(i) for i in range(1, n + 1)]
        return Graph(tuple(labels), ())
    pairs = []
    for part in spec.split(","):
        ends = part.split("-")
        if len(ends) != 2:
            raise ParseError(f"bad edge {part!r} in --base (expected u-v)")
        pairs.append(tuple(ends))
    return graph_from_edges(pairs)


def generate(family: str, params: Sequence[str], base: str | None = None):
    if family == "rp2":
        _ints(params, 0, family)
        return rp2()
    if family == "range":
        p, q, r = _ints(params, 3, family)
        return range_complex(p, q, r)
    if family == "bight-example":
        m, ell = _ints(params, 2, family)
        return bight_example(m, ell)
    if family == "example-8-4":
        _ints(params, 0, family)
        return triangle_plus_point()
    if family == "example-5-12":
        _ints(params, 0, family)
        return nerve_counterexample()
    if family in ("multi-whisker", "vwc-expansion"):
        if base is None:
            raise ParseError(f"{family} needs --base")
        g0 = _edges_param(base)
        counts = _ints(params, g0.n, family)
        if any(c < 1 for c in counts):
            raise ParseError("counts must be positive")
        return multi_whisker(g0, counts) if family == "multi-whisker" else vwc_expansion(g0, counts)
    raise ParseError(f"unknown family {family!r}")


def cmd_generate(args) -> None:
    try:
        obj = generate(args.family, args.params, args.base)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
    if isinstance(obj, Graph):
        _emit(graph_to_json(obj), args.json, format_edges(obj).rstrip("\n"))
    else:
        _emit(complex_to_json(obj), args.json, format_facets(obj).rstrip("\n"))


def cmd_suite(args) -> int:
    names = args.only or None
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ParseError(f"unknown suite {unknown[0]!r}; known: {', '.join(sorted(SUITES))}")
    results = run_all(args.seed, names, args.scale, args.cap_n if args.cap_n is not None else 64)
    ok = all(r.ok for r in results)
    if args.json:
        _emit({"seed": args.seed, "ok": ok, "suites": [r.to_dict() for r in results]}, True)
    else:
        lines = [r.line() for r in results]
        for r in results:
            lines += [f"  {r.name}: {f}" for f in r.failures]
        lines.append(f"{'all suites passed' if ok else 'FAILURES'} (seed {args.seed})")
        _emit({}, False, "\n".join(lines))
    return EXIT_OK if ok else EXIT_SUITE


def _char(text: str) -> int:
    try:
        return check_field(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the parse-error status, keeping 2 for guard refusals."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vnum", description="v-numbers of Stanley-Reisner ideals")
    parser.add_argument("--version", action="version", version=f"vnum {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (sorted keys)")
    common.add_argument("--cap-n", type=int, default=None, help="refuse inputs with more vertices")
    common.add_argument("--seed", type=int, default=0)
    data = argparse.ArgumentParser(add_help=False, parents=[common])
    data.add_argument("--input", "-i", help="facet list, ideal, edge list, or JSON")
    data.add_argument("--kind", choices=("complex", "ideal", "graph"), help="override input detection")
    data.add_argument("--char", type=_char, default=2, help="field characteristic (prime, default 2)")
    data.add_argument("--cover", action="store_true", help="for graphs, use the cover ideal J(G)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("dual", parents=[data], help="Alexander dual").set_defaults(func=cmd_dual)
    sub.add_parser("v", parents=[data], help="v-number with witnesses").set_defaults(func=cmd_v)
    sub.add_parser("betti", parents=[data], help="graded Betti table").set_defaults(func=cmd_betti)
    p = sub.add_parser("depth", parents=[data], help="depth of S/I^(ell)")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--verbose", action="store_true", help="print every nonzero local cohomology piece")
    p.set_defaults(func=cmd_depth)
    p = sub.add_parser("serre", parents=[data], help="S_r-depth of S/I^(ell)")
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_serre)
    sub.add_parser("classify", parents=[data], help="Cohen-Macaulay type and structure flags").set_defaults(
        func=cmd_classify)
    p = sub.add_parser("generate", parents=[common], help="emit a named construction")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", help="integers: range p q r, bight-example m l, or counts")
    p.add_argument("--base", help="base graph for whisker families, e.g. 1-2,2-3 or a vertex count")
    p.set_defaults(func=cmd_generate)
    p = sub.add_parser("suite", parents=[common], help="run the property suites")
    p.add_argument("--only", nargs="+", metavar="NAME", help="run only these suites")
    p.add_argument("--scale", type=float, default=1.0, help="multiply every sample count")
    p.add_argument("--list", action="store_true", help="list suites and exit")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # generate takes counts on either side of --base
    if extra and args.command == "generate" and not any(x.startswith("-") for x in extra):
        args.params += extra
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if args.command == "suite" and args.list:
        for name, (_, count) in sorted(SUITES.items()):
            print(f"{name} ({count})")
        return EXIT_OK
    for name in ("ell", "r"):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name} must be positive")
    try:
        code = args.func(args)
    except GuardError as exc:
        print(f"vnum: refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ParseError as exc:
        print(f"vnum: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.flush()
    return code if code is not None else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
