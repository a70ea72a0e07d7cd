"""Command line interface.

Inputs are JSON objects read from a file argument or stdin: a complex is
``{"vertices": [...], "facets": [[...], ...]}`` and a (hyper)graph is
``{"vertices": [...], "edges": [[...], ...]}``.  Structural checks on a
graph input are run on its independence complex; ``check chordal`` requires
a graph.  ``--s`` (alias ``--expand``) applies an expansion first, with one
copy count per vertex in universe order.

Exit codes: 0 = success / property holds, 1 = property fails (or the
requested route does not apply), 2 = undecided within the search budget,
3 = bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .complexes import SimplicialComplex
from .errors import BudgetExceeded, TooLarge
from .expansion import expand_complex, expand_hypergraph, validate_copies
from .homology import (
    FieldChoice,
    betti_numbers_hochster,
    is_cohen_macaulay,
    krull_dim_quotient,
)
from .hypergraphs import Graph, Hypergraph, independence_complex, is_chordal, load_graph_or_hypergraph
from .ideals import (
    betti_from_linear_quotients,
    find_linear_quotients_order,
    stanley_reisner_ideal,
)
from .invariants import bight
from .search import MODES, search_expansion_cm
from .structure import (
    expansion_shelling,
    find_shelling,
    is_vertex_decomposable,
    vertex_decomposition_tree,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_OPERATIONAL = 3

CHECKS = ("vd", "shellable", "pure", "connected", "cm", "chordal")
WHAT_CHOICES = ("pd", "depth", "reg", "dim", "bight", "betti", "betti-quotient")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 means 'undecided' here, so
    usage problems are remapped to 3."""

    def error(self, message: str) -> None:  # pragma: no cover - thin wrapper
        self.print_usage(sys.stderr)
        self.exit(EXIT_OPERATIONAL, f"{self.prog}: error: {message}\n")


def _emit(payload: Any) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _read_input(source: str) -> SimplicialComplex | Hypergraph:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("input JSON must be an object")
    if "facets" in data:
        return SimplicialComplex.from_dict(data)
    if "edges" in data:
        return load_graph_or_hypergraph(data)
    raise ValueError("input JSON needs a 'facets' or 'edges' key")


def _parse_copies(text: str, n: int) -> tuple[int, ...]:
    try:
        cs = tuple(int(p) for p in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"--s must be comma-separated integers, got {text!r}")
    return validate_copies(cs, n)


def _input_object(args: argparse.Namespace) -> SimplicialComplex | Hypergraph:
    cpath = getattr(args, "complex_path", None)
    gpath = getattr(args, "graph_path", None)
    if cpath and gpath:
        raise ValueError("give at most one of --complex / --graph")
    obj = _read_input(cpath or gpath or args.source)
    if cpath and not isinstance(obj, SimplicialComplex):
        raise ValueError("--complex file does not contain a complex")
    if gpath and not isinstance(obj, Hypergraph):
        raise ValueError("--graph file does not contain a graph or hypergraph")
    return obj


def _final_complex(args: argparse.Namespace) -> SimplicialComplex:
    """The complex a command operates on: the input (a graph becomes its
    independence complex), expanded when --s is given."""
    obj = _input_object(args)
    if isinstance(obj, Hypergraph):
        if args.s is not None:
            obj = expand_hypergraph(obj, _parse_copies(args.s, obj.num_vertices))
        return independence_complex(obj)
    if args.s is not None:
        return expand_complex(obj, _parse_copies(args.s, obj.num_vertices))
    return obj


def _bool_result(
    args: argparse.Namespace, kind: str, result: bool, witness: Any = None
) -> int:
    if args.json:
        payload = {"check": kind, "result": result}
        if witness is not None:
            payload["witness"] = witness
        _emit(payload)
    else:
        print("true" if result else "false")
    return EXIT_TRUE if result else EXIT_FALSE


# ----- subcommands ----------------------------------------------------------------


def cmd_expand(args: argparse.Namespace) -> int:
    if args.s is None:
        raise ValueError("expand needs --s (one copy count per vertex)")
    obj = _input_object(args)
    copies = _parse_copies(args.s, obj.num_vertices)
    out = (
        expand_hypergraph(obj, copies)
        if isinstance(obj, Hypergraph)
        else expand_complex(obj, copies)
    )
    _emit(out.as_dict())
    return EXIT_TRUE


def cmd_check(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind is not None and kind not in CHECKS:
        if args.property is not None and args.source == "-":
            # "check --property vd FILE": the positional was the file
            args.source = kind
            kind = None
        else:
            raise ValueError(f"unknown property {kind!r} (choose from {CHECKS})")
    if kind is not None and args.property is not None and kind != args.property:
        raise ValueError("conflicting property given positionally and via --property")
    kind = kind if kind is not None else args.property
    if kind is None:
        raise ValueError(f"check needs a property: one of {CHECKS}")

    if kind == "chordal":
        obj = _input_object(args)
        if not isinstance(obj, Graph):
            raise ValueError("'check chordal' needs a graph input")
        if args.s is not None:
            obj = expand_hypergraph(obj, _parse_copies(args.s, obj.num_vertices))
        return _bool_result(args, "chordal", is_chordal(obj))

    sc = _final_complex(args)
    field = FieldChoice.parse(args.field)
    witness: Any = None
    if kind == "connected":
        result = sc.is_connected()
    elif kind == "pure":
        result = sc.is_pure()
    elif kind == "vd":
        kw = {} if args.budget is None else {"budget": args.budget}
        result = is_vertex_decomposable(sc, **kw)
        if result and args.json:
            witness = vertex_decomposition_tree(sc, **kw)
    elif kind == "shellable":
        kw: dict[str, Any] = {}
        if args.budget is not None:
            kw["budget"] = args.budget
        if args.facet_cap is not None:
            kw["max_facets"] = args.facet_cap
        order = find_shelling(sc, **kw)
        result = order is not None
        if result and args.json:
            witness = [sorted(f) for f in order]
    else:  # cm
        result = is_cohen_macaulay(sc, field)
    return _bool_result(args, kind, result, witness)


def cmd_invariants(args: argparse.Namespace) -> int:
    sc = _final_complex(args)
    field = FieldChoice.parse(args.field)
    what = [w.strip() for w in args.what.split(",") if w.strip()]
    for w in what:
        if w not in WHAT_CHOICES:
            raise ValueError(f"unknown invariant {w!r} (choose from {WHAT_CHOICES})")

    ideal = stanley_reisner_ideal(sc)
    hochster_kw = {} if args.var_cap is None else {"max_variables": args.var_cap}
    tables: dict[str, Any] = {}

    if args.via in ("hochster", "both"):
        table_h = betti_numbers_hochster(ideal, field, **hochster_kw)
        tables["hochster"] = table_h
    if args.via in ("lq", "both"):
        if ideal.is_zero:
            from .betti import BettiTable

            tables["lq"] = BettiTable({})
        else:
            lq_kw = {} if args.budget is None else {"budget": args.budget}
            cert = find_linear_quotients_order(ideal, **lq_kw)
            if cert is None:
                print(
                    "the Stanley-Reisner ideal has no linear quotients; "
                    "use --via hochster",
                    file=sys.stderr,
                )
                return EXIT_FALSE
            tables["lq"] = betti_from_linear_quotients(cert)
    if args.via == "both":
        assert tables["hochster"] == tables["lq"]

    table = tables["lq"] if args.via == "lq" else tables["hochster"]
    pd_i = table.projective_dimension
    pd = 0 if pd_i is None else pd_i + 1
    reg_i = table.regularity
    out: dict[str, Any] = {"field": field.label, "via": args.via}
    values: dict[str, Any] = {
        "pd": pd,
        "depth": ideal.num_variables - pd,
        "reg": 0 if reg_i is None else reg_i - 1,
        "dim": krull_dim_quotient(sc),
        "bight": bight(sc),
        "betti": table.as_json_dict(),
        "betti-quotient": table.shift_for_quotient().as_json_dict(),
    }
    for w in what:
        out[w] = values[w]
    _emit(out)
    return EXIT_TRUE


def cmd_dual(args: argparse.Namespace) -> int:
    sc = _final_complex(args)
    _emit(sc.alexander_dual().as_dict())
    return EXIT_TRUE


def cmd_shelling(args: argparse.Namespace) -> int:
    obj = _input_object(args)
    base = independence_complex(obj) if isinstance(obj, Hypergraph) else obj
    kw: dict[str, Any] = {}
    if args.budget is not None:
        kw["budget"] = args.budget
    if args.facet_cap is not None:
        kw["max_facets"] = args.facet_cap

    induced = False
    if args.s is None:
        order = find_shelling(base, **kw)
    else:
        copies = _parse_copies(args.s, base.num_vertices)
        base_order = find_shelling(base, **kw)
        if base_order is not None:
            order = expansion_shelling(base, base_order, copies)
            induced = True
        else:
            order = find_shelling(expand_complex(base, copies), **kw)

    if order is None:
        if args.json:
            _emit({"shelling": None})
        else:
            print("none")
        return EXIT_FALSE
    payload = {"shelling": [sorted(f) for f in order], "induced_from_base": induced}
    if args.json:
        _emit(payload)
    else:
        print("; ".join(",".join(f) for f in payload["shelling"]))
    return EXIT_TRUE


def cmd_search(args: argparse.Namespace) -> int:
    report = search_expansion_cm(
        trials=args.trials,
        seed=args.seed,
        mode=args.mode,
        field=FieldChoice.parse(args.field),
        max_vertices=args.max_vertices,
        max_copy=args.max_copy,
        total_copy_cap=args.total_copy_cap,
    )
    _emit(report)
    return EXIT_TRUE if report["conjecture_held"] else EXIT_FALSE


# ----- parser wiring ---------------------------------------------------------------


def _add_io(p: argparse.ArgumentParser, *, with_s: bool = True) -> None:
    p.add_argument(
        "source",
        nargs="?",
        default="-",
        help="input JSON file ('-' or omitted = stdin)",
    )
    p.add_argument(
        "--complex",
        dest="complex_path",
        default=None,
        metavar="FILE",
        help="read a complex from FILE (alternative to the positional)",
    )
    p.add_argument(
        "--graph",
        dest="graph_path",
        default=None,
        metavar="FILE",
        help="read a graph/hypergraph from FILE (alternative to the positional)",
    )
    if with_s:
        p.add_argument(
            "--s",
            "--expand",
            dest="s",
            default=None,
            metavar="S1,S2,...",
            help="expand first: one copy count per vertex, in universe order",
        )
    p.add_argument("--json", action="store_true", help="structured JSON output")
    p.add_argument("--field", default="q", help="coefficient field: q or gf:<prime>")
    p.add_argument("--budget", type=int, default=None, help="search budget override")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="complexpand",
        description="expansions of simplicial complexes, hypergraphs, and "
        "squarefree monomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expanded complex or (hyper)graph as JSON")
    _add_io(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check", help="decide a structural property")
    p.add_argument(
        "kind",
        nargs="?",
        default=None,
        help=f"property to decide: one of {', '.join(CHECKS)}",
    )
    _add_io(p)
    p.add_argument(
        "--property",
        choices=CHECKS,
        default=None,
        help="alternative spelling of the positional property",
    )
    p.add_argument("--facet-cap", type=int, default=None, help="shelling facet cap")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="homological invariants of the face ring")
    _add_io(p)
    p.add_argument(
        "--what",
        default="pd,depth,reg,dim",
        help=f"comma list from {','.join(WHAT_CHOICES)}",
    )
    p.add_argument(
        "--via",
        choices=("hochster", "lq", "both"),
        default="hochster",
        help="independent subcomplex-homology route, linear-quotients route, "
        "or both (cross-checked)",
    )
    p.add_argument("--var-cap", type=int, default=None, help="variable count cap")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("dual", help="Alexander dual complex as JSON")
    _add_io(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("shelling", help="find a shelling order")
    _add_io(p)
    p.add_argument("--facet-cap", type=int, default=None, help="shelling facet cap")
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser(
        "search-conjecture",
        help="random search for a Cohen-Macaulay complex with non-CM expansion",
    )
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="cm")
    p.add_argument("--field", default="q", help="coefficient field: q or gf:<prime>")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--max-copy", type=int, default=3)
    p.add_argument("--total-copy-cap", type=int, default=12)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    # argparse cannot match "cmd --flag value FILE" against an optional
    # positional; recover the lone trailing file name by hand
    args, extra = parser.parse_known_args(argv)
    if extra:
        if (
            len(extra) == 1
            and not extra[0].startswith("-")
            and getattr(args, "source", None) == "-"
        ):
            args.source = extra[0]
        else:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        return args.func(args)
    except (BudgetExceeded, TooLarge) as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OPERATIONAL


if __name__ == "__main__":
    sys.exit(main())
