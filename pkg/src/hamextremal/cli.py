"""Command-line entry point.

Standard output carries only graph6 lines, numbers, tab-separated records or
JSON.  Diagnostics go to standard error.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 refusal
(budget exceeded or parameters outside the proven range).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import constructions as cons
from .enumeration import EnumConstraints, EnumerationBudgetError, default_jobs, enumerate_graphs, read_stream
from .formulas import HypothesisError, Property, PropertyKind, count_cliques, edge_bound, turan_edges
from .graph_core import CapacityError, Graph6Error, PartSizes, complete_multipartite, from_graph6, to_graph6
from .properties import decide
from . import verify as vf

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Refusal(Exception):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parts(text: str) -> PartSizes:
    try:
        sizes = [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise UsageError(f"bad part sizes {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise UsageError("part sizes must be positive integers")
    return PartSizes.of(sizes)


def _property(name: str, k: int | None) -> Property:
    try:
        prop = Property.parse(name, k)
    except ValueError:
        raise UsageError(f"unknown property {name!r}") from None
    if k is not None and prop.kind not in (PropertyKind.KPATH, PropertyKind.KHAM):
        raise UsageError("--k applies to kpath and kham only")
    return prop


def _input_graphs(args):
    if args.stdin and args.graphs:
        raise UsageError("give graph6 arguments or --stdin, not both")
    if args.stdin:
        return read_stream("-")
    if not args.graphs:
        raise UsageError("no graph given (pass graph6 strings or --stdin)")
    return (from_graph6(s) for s in args.graphs)


# ---------------------------------------------------------------- construct

def cmd_construct(args) -> int:
    kind = args.kind
    need = {
        "turan": ("n", "r"), "colex": ("m",), "colex-turan": ("m", "r"),
        "family": ("family", "n", "r", "ell"), "multipartite": ("parts",),
        "g-star": ("n", "r", "ell"), "exceptional": ("name",),
    }[kind]
    missing = [f"--{x}" for x in need if getattr(args, x) is None]
    if missing:
        raise UsageError(f"construct {kind} needs {', '.join(missing)}")
    if kind == "turan":
        graphs = [cons.turan_graph(args.n, args.r)]
    elif kind == "colex":
        graphs = [cons.colex_graph(args.m)]
    elif kind == "colex-turan":
        graphs = [cons.colex_turan_graph(args.m, args.r)]
    elif kind == "family":
        spec = cons.FamilySpec(args.family, args.n, args.r, args.ell)
        graphs = cons.family_members(spec)
    elif kind == "multipartite":
        graphs = [complete_multipartite(_parts(args.parts))]
    elif kind == "g-star":
        if args.via_colex:
            graphs = [cons.g_star_via_colex(args.n, args.r, args.ell)]
        else:
            graphs = [cons.g_star(args.n, args.r, args.ell)]
    else:
        try:
            key = vf.normalize_witness_name(args.name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        graphs = [cons.exceptional_graph(key)]
    for g in graphs:
        print(to_graph6(g))
    _err(f"{len(graphs)} graph(s)")
    return EXIT_OK


# ---------------------------------------------------------------- check / count

_VERDICT_WORDS = {
    PropertyKind.TRACE: "traceable",
    PropertyKind.HAM: "hamiltonian",
    PropertyKind.HAMCONN: "hamiltonian-connected",
    PropertyKind.KPATH: "{k}-path-hamiltonian",
    PropertyKind.KHAM: "{k}-hamiltonian",
    PropertyKind.CHORDED: "chorded-pancyclic",
}


def verdict_word(prop: Property, holds: bool) -> str:
    word = _VERDICT_WORDS[prop.kind].format(k=prop.k)
    return word if holds else "non-" + word


def cmd_check(args) -> int:
    prop = _property(args.property, args.k)
    for g in _input_graphs(args):
        try:
            d = decide(g, prop)
        except ValueError as exc:
            raise UsageError(f"{to_graph6(g)}: {exc}") from None
        cert = None
        if d.witness is not None:
            cert = list(d.witness.vertices)
        elif d.counterexample is not None:
            cert = list(d.counterexample)
        if args.json:
            print(json.dumps({"graph6": to_graph6(g), "property": prop.label, "holds": d.holds,
                              "verdict": verdict_word(prop, d.holds),
                              "witness" if d.holds else "counterexample": cert}, sort_keys=True))
        else:
            cert_text = ",".join(map(str, cert)) if cert else "-"
            print(f"{verdict_word(prop, d.holds)}\t{cert_text}")
    return EXIT_OK


def cmd_count(args) -> int:
    if args.cliques < 1:
        raise UsageError("--cliques must be at least 1")
    for g in _input_graphs(args):
        print(count_cliques(g, args.cliques))
    return EXIT_OK


# ---------------------------------------------------------------- formula

def cmd_formula(args) -> int:
    if args.n is None or args.r is None:
        raise UsageError("formula needs --n and --r")
    if args.n < 0 or args.r < 1:
        raise UsageError("need n >= 0 and r >= 1")
    if args.which == "turan-edges":
        print(turan_edges(args.n, args.r))
        return EXIT_OK
    if args.property is None:
        raise UsageError("formula bound needs --property")
    prop = _property(args.property, args.k)
    res = edge_bound(prop, args.n, args.r)
    if not res.ok:
        raise Refusal(f"{prop.label} bound not available at n={args.n}, r={args.r}: {res.reason}")
    print(res.value)
    return EXIT_OK


# ---------------------------------------------------------------- enumerate

def cmd_enumerate(args) -> int:
    c = EnumConstraints(args.n, max_clique=args.max_clique, min_edges=args.min_edges,
                        max_edges=args.max_edges, bipartite_only=args.bipartite)
    count = 0
    out = sys.stdout
    for g in enumerate_graphs(c, jobs=args.jobs):
        count += 1
        if not args.count:
            out.write(to_graph6(g) + "\n")
    if args.count:
        print(count)
    _err(f"{count} graph(s)")
    return EXIT_OK


# ---------------------------------------------------------------- verify

_THEOREM = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*([^)]*)\)|:(.*))?\s*$")


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise UsageError(f"bad theorem arguments {text!r}") from None


def _run_verify(args) -> vf.ExtremalReport:
    m = _THEOREM.match(args.theorem.lower())
    if not m:
        raise UsageError(f"bad theorem id {args.theorem!r}")
    name = m.group(1)
    raw = m.group(2) if m.group(2) is not None else m.group(3)
    jobs = args.jobs
    if name == "witness":
        if not raw:
            raise UsageError("witness needs a graph name, e.g. witness(K6221)")
        try:
            return vf.witness_check(raw)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if name in ("kk_clique", "frohmader"):
        nums = _ints(raw)
        t = nums[0] if nums else args.t
        r = nums[1] if len(nums) > 1 else (args.r if name == "frohmader" else None)
        if t is None or args.m is None or (name == "frohmader" and r is None):
            raise UsageError(f"{name} needs t, --m{' and r' if name == 'frohmader' else ''}")
        return vf.verify_clique_bounds(t, args.m, r, n_max=args.n or 8, jobs=jobs)
    if name == "degree":
        nums = _ints(raw)
        r = nums[0] if nums else args.r
        ell = nums[1] if len(nums) > 1 else args.ell
        if r is None or ell is None or args.n is None:
            raise UsageError("degree needs r, ell and --n, e.g. degree(8,-1) --n 7")
        return vf.verify_degree_theorem(r, ell, args.n, jobs=jobs)
    if name == "family":
        nums = _ints(raw)
        k = nums[0] if nums else (args.k if args.k is not None else args.ell)
        if k is None or args.n is None or args.r is None:
            raise UsageError("family needs k, --n and --r")
        return vf.family_characterization_check(args.n, args.r, k)
    t = args.t
    if name == "clique_extremal":
        parts = [p.strip() for p in (raw or "").split(",")]
        if len(parts) != 2:
            raise UsageError("clique_extremal needs (property,t)")
        name, raw = parts[0], None
        m2 = _THEOREM.match(name)
        if m2:
            name, raw = m2.group(1), m2.group(2) or m2.group(3)
        t = int(parts[1])
    k = _ints(raw)[0] if raw else args.k
    try:
        prop = Property(PropertyKind(name), k or 0)
    except ValueError:
        raise UsageError(f"unknown theorem {args.theorem!r}") from None
    if prop.kind in (PropertyKind.KPATH, PropertyKind.KHAM) and k is None:
        raise UsageError(f"{name} needs k, e.g. {name}(1) or --k 1")
    if args.n is None or args.r is None:
        raise UsageError("verify needs --n and --r")
    metric = vf.Metric("cliques", t) if t is not None else vf.EDGES
    return vf.extremal_number(prop, args.n, args.r, metric, jobs=jobs, witness_only=args.witness_only)


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    rep = _run_verify(args)
    text = rep.to_json(timing=args.timing)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.csv:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=vf.CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerow(vf.csv_row(rep))
        if args.csv == "-":
            sys.stdout.write(buf.getvalue())
        else:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(buf.getvalue())
    if args.csv != "-":
        sys.stdout.write(text)
    _err(f"{rep.theorem}: {rep.verdict.value} ({rep.runtime_ms} ms)")
    if rep.verdict is vf.Verdict.MISMATCH:
        for g6 in rep.missing:
            _err(f"  predicted but not extremal: {g6}")
        for g6 in rep.unexpected:
            _err(f"  extremal but not predicted: {g6}")
        return EXIT_MISMATCH
    if rep.verdict is vf.Verdict.OUT_OF_HYPOTHESIS:
        _err(f"  outside the proven range: {rep.note}")
        return EXIT_REFUSED
    return EXIT_OK


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hamextremal", description="Turán-type extremal numbers for Hamiltonicity-type properties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="emit graph6 of a named construction")
    c.add_argument("kind", choices=["turan", "colex", "colex-turan", "family", "multipartite", "g-star", "exceptional"])
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--ell", type=int)
    c.add_argument("--family", choices=["G", "H", "J"])
    c.add_argument("--parts")
    c.add_argument("--name")
    c.add_argument("--via-colex", action="store_true", help="build g-star from the colex Turán order")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="decide a property for graph6 inputs")
    c.add_argument("--property", required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--stdin", action="store_true")
    c.add_argument("--json", action="store_true", help="one JSON object per line")
    c.add_argument("graphs", nargs="*")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("count", help="count t-cliques of graph6 inputs")
    c.add_argument("--cliques", type=int, required=True)
    c.add_argument("--stdin", action="store_true")
    c.add_argument("graphs", nargs="*")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("formula", help="evaluate an exact formula")
    c.add_argument("which", choices=["turan-edges", "bound"])
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--property")
    c.add_argument("--k", type=int)
    c.set_defaults(func=cmd_formula)

    c = sub.add_parser("enumerate", help="stream non-isomorphic graphs as graph6")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--max-clique", type=int)
    c.add_argument("--min-edges", type=int)
    c.add_argument("--max-edges", type=int)
    c.add_argument("--bipartite", action="store_true")
    c.add_argument("--count", action="store_true", help="print only the number of graphs")
    c.add_argument("--jobs", type=int, default=None)
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("verify", help="exhaustively check a registry claim")
    c.add_argument("--theorem", required=True,
                   help="trace, ham, hamconn, kpath(k), kham(k), chorded, clique_extremal(P,t), "
                        "kk_clique(t), frohmader(t,r), degree(r,ell), family(k), witness(NAME)")
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int, help="edge budget for clique-bound theorems")
    c.add_argument("--ell", type=int)
    c.add_argument("--witness-only", action="store_true")
    c.add_argument("--jobs", type=int, default=None)
    c.add_argument("--json", metavar="PATH")
    c.add_argument("--csv", metavar="PATH", help="also write a one-row CSV summary ('-' for stdout instead of JSON)")
    c.add_argument("--timing", action="store_true", help="fill runtime_ms (makes output run-dependent)")
    c.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 0) is None:
            args.jobs = default_jobs()
        return args.func(args)
    except UsageError as exc:
        _err(f"usage error: {exc}")
        return EXIT_USAGE
    except (Graph6Error, CapacityError) as exc:
        _err(f"input error: {exc}")
        return EXIT_USAGE
    except (Refusal, vf.BudgetRefusal, EnumerationBudgetError, HypothesisError) as exc:
        _err(f"refused: {exc}")
        return EXIT_REFUSED
    except ValueError as exc:
        _err(f"usage error: {exc}")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())
