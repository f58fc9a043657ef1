"""Command-line interface: ``gencol <command> ...``.

Graph arguments are an edge-list path or ``named:<name>`` (for example
``named:petersen`` or ``named:cycle(7)``). Every command accepts the global
flags ``--seed``, ``--budget``, ``--json``, ``--csv`` and ``--quiet`` either
before or after the command name.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from gencol import __version__
from gencol.covers import (
    build_cover,
    project_cover,
    read_cover,
    validate_cover,
    write_cover,
)
from gencol.errors import InputError, InvariantViolation, ResourceError
from gencol.exact import adm_exact, col_exact, wcol_exact
from gencol.expansion import check_adm_bound, top_grad_bruteforce
from gencol.experiments import cauchy_check, girth_lb, heuristic_orders
from gencol.extremal import gen_gkr, size_estimate
from gencol.graph import (
    BipartiteGraph,
    Graph,
    complement,
    format_edge_list,
    read_edge_list,
    subdivide,
    write_edge_list,
)
from gencol.hardness import bcbs_to_wcol, verify_reduction
from gencol.named import named_graph
from gencol.reach import (
    LinearOrder,
    eval_adm,
    eval_col,
    eval_wcol,
    format_order,
    read_order,
    write_order,
)
from gencol.treedec import (
    binomial_certificate,
    format_td,
    make_smooth,
    read_td,
    td_order,
    validate_td,
    write_td,
)

EVALUATORS = {"wcol": eval_wcol, "col": eval_col, "adm": eval_adm}
SOLVERS = {"wcol": wcol_exact, "col": col_exact, "adm": adm_exact}
HEURISTICS = ("degeneracy", "greedy-adm", "identity")

GLOBAL_DEFAULTS = {"seed": 0, "budget": None, "json": None, "csv": None, "quiet": False}

EXIT_INPUT, EXIT_RESOURCE, EXIT_VIOLATION, EXIT_IO = 2, 3, 4, 5


# -- helpers -------------------------------------------------------------------------


class Run:
    """Collects everything a command reports."""

    def __init__(self, command: str, args):
        self.command = command
        self.args = args
        self.inputs: list[str] = []
        self.params: dict = {}
        self.values: dict = {}
        self.bounds: dict = {}
        self.witness_files: list[str] = []
        self.rows: list[dict] = []
        self.lines: list[str] = []
        self.ok = True
        self.start = time.perf_counter()

    def say(self, line: str) -> None:
        self.lines.append(line)

    def record_input(self, text: str) -> None:
        self.inputs.append(text)

    def input_hash(self) -> str:
        h = hashlib.sha256()
        for text in self.inputs:
            h.update(text.encode())
            h.update(b"\0")
        return h.hexdigest()

    def report(self) -> dict:
        return {
            "command": self.command,
            "input_hash": self.input_hash(),
            "params": _plain(self.params),
            "values": _plain(self.values),
            "bounds": _plain(self.bounds),
            "witness_files": list(self.witness_files),
            "elapsed_ms": round((time.perf_counter() - self.start) * 1000, 3),
            "seed": self.args.seed,
        }


def _plain(obj):
    """JSON-ready copy: fractions become ``"p/q"`` strings, infinities ``null``."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and obj == float("inf"):
        return None
    return obj


def load_graph(spec: str, run: Run | None = None) -> Graph:
    if spec.startswith("named:"):
        g = named_graph(spec[len("named:") :])
    else:
        g = read_edge_list(spec)
    if run is not None:
        run.record_input(format_edge_list(g))
    return g


def _out_text(path: str | None, text: str, run: Run) -> None:
    if path is None or path == "-":
        run.say(text.rstrip("\n"))
    else:
        Path(path).write_text(text)
        run.witness_files.append(path)


def _pick_order(g: Graph, args, r: int, run: Run) -> tuple[LinearOrder, str]:
    if getattr(args, "order", None):
        order = read_order(args.order)
        if len(order) != g.n:
            raise InputError(f"order has {len(order)} entries, graph has {g.n} vertices")
        run.record_input(format_order(order))
        return order, f"file:{args.order}"
    name = getattr(args, "heuristic", None) or "degeneracy"
    orders = heuristic_orders(g, max(r, 1))
    return orders[name], name


# -- commands ------------------------------------------------------------------------


def cmd_compute(args, run: Run) -> None:
    g = load_graph(args.graph, run)
    r = args.r
    run.params.update(number=args.number, r=r)
    if args.order or args.heuristic:
        order, source = _pick_order(g, args, r, run)
        value = EVALUATORS[args.number](g, order, r)
        run.params["order"] = source
        run.values.update(value=value, exact=False)
        run.bounds["upper"] = value
        run.say(f"{args.number}_{r} <= {value}  (upper bound from order {source})")
    else:
        value, order = SOLVERS[args.number](g, r, args.budget, witness=True)
        run.params["order"] = "exact"
        run.values.update(value=value, exact=True)
        run.bounds.update(lower=value, upper=value)
        run.say(f"{args.number}_{r} = {value}  (certified)")
    if args.witness:
        write_order(order, args.witness)
        run.witness_files.append(args.witness)
        run.say(f"witness order written to {args.witness}")


def cmd_order(args, run: Run) -> None:
    g = load_graph(args.graph, run)
    order, source = _pick_order(g, args, args.r, run)
    run.params.update(heuristic=source, r=args.r)
    for name, fn in EVALUATORS.items():
        run.values[name] = fn(g, order, args.r)
    _out_text(args.out, format_order(order), run)
    run.say(
        f"order {source}: "
        + ", ".join(f"{k}_{args.r} <= {v}" for k, v in run.values.items())
    )


def cmd_gen(args, run: Run) -> None:
    kind = args.kind
    run.params["kind"] = kind
    if kind == "gkr":
        run.params.update(k=args.k, r=args.r)
        size = size_estimate(args.k, args.r)
        run.values["n"] = size
        if args.estimate:
            run.say(f"G({args.k},{args.r}) would have {size} vertices")
            return
        inst = gen_gkr(args.k, args.r, size_cap=args.cap)
        run.values.update(m=inst.graph.m, c=inst.c, width=inst.td.width)
        if args.out:
            edges, td = f"{args.out}.edges", f"{args.out}.td"
            write_edge_list(inst.graph, edges)
            write_td(inst.td, inst.graph.n, td)
            run.witness_files += [edges, td]
            run.say(f"wrote {edges} and {td}")
        else:
            run.say(format_edge_list(inst.graph).rstrip("\n"))
        run.say(f"G({args.k},{args.r}): n={inst.graph.n} m={inst.graph.m} c={inst.c}")
        return
    if kind == "named":
        g = named_graph(args.name)
        run.params["name"] = args.name
    elif kind == "subdivide":
        g = subdivide(load_graph(args.graph, run), args.s)
        run.params["s"] = args.s
    else:
        g = complement(load_graph(args.graph, run))
    run.values.update(n=g.n, m=g.m)
    _out_text(args.out, format_edge_list(g), run)


def cmd_td(args, run: Run) -> None:
    g = load_graph(args.graph, run)
    td, n = read_td(args.td)
    run.record_input(Path(args.td).read_text())
    if n != g.n:
        raise InputError(f"decomposition is for {n} vertices, graph has {g.n}")
    run.params["action"] = args.action
    if args.action == "validate":
        rep = validate_td(g, td)
        run.values.update(
            valid=rep.valid, width=rep.width, smooth=rep.smooth, violation=rep.violation
        )
        run.ok = rep.valid
        run.say("valid" if rep.valid else f"invalid: {rep.violation}")
        run.say(f"width {rep.width}, smooth {rep.smooth}")
    elif args.action == "smooth":
        sm = make_smooth(g, td)
        run.values.update(width=sm.width, bags=sm.num_nodes)
        if args.out:
            write_td(sm, g.n, args.out)
            run.witness_files.append(args.out)
        else:
            run.say(format_td(sm, g.n).rstrip("\n"))
    else:
        if args.root is not None:
            td = td.rerooted(args.root)
        order = td_order(g, td)
        run.params["root"] = td.root
        if args.r is not None:
            cert = binomial_certificate(g, td, args.r)
            run.params["r"] = args.r
            run.values["wcol"] = cert.wcol
            run.bounds["binomial"] = cert.bound
            run.say(f"wcol_{args.r} of bag order = {cert.wcol} <= C({args.r + cert.width},{cert.width}) = {cert.bound}")
        _out_text(args.out, format_order(order), run)


def cmd_cover(args, run: Run) -> None:
    run.params.update(action=args.action, r=args.r)
    if args.action == "build":
        g = load_graph(args.graph, run)
        order, source = _pick_order(g, args, 2 * args.r, run)
        cover = build_cover(g, order, args.r)
        rep = validate_cover(g, cover, args.r)
        run.params["order"] = source
        run.values.update(rep.as_dict(), clusters=len(cover))
        run.bounds["wcol_2r_of_order"] = eval_wcol(g, order, 2 * args.r)
        if args.out:
            write_cover(cover, args.out)
            run.witness_files.append(args.out)
        run.say(f"{len(cover)} clusters, radius {rep.max_radius}, degree {rep.max_degree}")
    elif args.action == "check":
        g = load_graph(args.graph, run)
        cover = read_cover(args.cover, args.r)
        run.record_input(Path(args.cover).read_text())
        rep = validate_cover(g, cover, args.r)
        run.values.update(rep.as_dict())
        run.ok = rep.is_cover
        run.say(("valid" if rep.is_cover else "not a cover") + f": radius {rep.max_radius}, degree {rep.max_degree}")
    else:
        g_sub = load_graph(args.graph, run)
        h = load_graph(args.base, run)
        cover = read_cover(args.cover, args.r * args.s if args.s else args.r)
        run.record_input(Path(args.cover).read_text())
        projected = project_cover(g_sub, h, args.s, cover, args.r)
        rep = validate_cover(h, projected, args.r)
        run.params["s"] = args.s
        run.values.update(rep.as_dict(), clusters=len(projected))
        run.ok = rep.is_cover
        if args.out:
            write_cover(projected, args.out)
            run.witness_files.append(args.out)
        run.say(("valid" if rep.is_cover else "not a cover") + f": radius {rep.max_radius}, degree {rep.max_degree}")


def cmd_reduce(args, run: Run) -> None:
    g = load_graph(args.graph, run)
    bg = BipartiteGraph.two_colour(g)
    reduced, threshold = bcbs_to_wcol(bg, args.k)
    run.params.update(k=args.k)
    run.values.update(n=reduced.n, k=args.k, threshold=threshold)
    if args.out:
        edges, side = f"{args.out}.edges", f"{args.out}.json"
        write_edge_list(reduced, edges)
        Path(side).write_text(json.dumps({"n": reduced.n, "k": args.k, "threshold": threshold}, sort_keys=True) + "\n")
        run.witness_files += [edges, side]
    else:
        run.say(format_edge_list(reduced).rstrip("\n"))
    run.say(f"threshold {threshold}")
    if args.verify:
        rep = verify_reduction(bg, args.k, args.budget)
        run.values.update(biclique=rep.biclique, wcol3=rep.wcol3, wcol4=rep.wcol4, equivalent=rep.ok)
        run.ok = rep.ok
        run.say(f"biclique {rep.biclique}, wcol_3 = {rep.wcol3}, wcol_4 = {rep.wcol4}: " + ("consistent" if rep.ok else "INCONSISTENT"))


def cmd_tgrad(args, run: Run) -> None:
    g = load_graph(args.graph, run)
    value = top_grad_bruteforce(g, args.r, args.budget)
    run.params["r"] = args.r
    run.values["tgrad"] = value
    run.say(f"top-grad at depth {args.r} = {value}")


def cmd_exp(args, run: Run) -> None:
    g = load_graph(args.graph, run)
    run.params.update(kind=args.kind, r=args.r)
    if args.kind == "adm-bound":
        rep = check_adm_bound(g, args.r, args.budget)
        run.values.update(adm=rep.adm, tgrad=rep.grad, holds=rep.holds)
        run.bounds.update(bound=rep.bound, slack=rep.slack)
        run.ok = rep.holds
        run.say(f"adm_{args.r} = {rep.adm} vs 6*{args.r}*({rep.grad})^3 = {rep.bound}: " + ("holds" if rep.holds else "FAILS"))
        return
    fn = girth_lb if args.kind == "girth-lb" else cauchy_check
    rep = fn(g, args.r, args.samples, args.seed, strict=False, jobs=args.jobs)
    run.params.update(samples=args.samples)
    run.values.update(orders=len(rep.rows), min_value=rep.min_value, min_slack=rep.min_slack, holds=rep.holds)
    if rep.bound is not None:
        run.bounds["bound"] = rep.bound
    run.rows = [
        {"label": row.label, "value": str(row.value), "bound": str(row.bound), "slack": str(row.slack)}
        for row in rep.rows
    ]
    run.ok = rep.holds
    run.say(f"{len(rep.rows)} orders, minimum slack {rep.min_slack}: " + ("holds" if rep.holds else "FAILS"))


# -- parser --------------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    g = parser.add_argument_group("global options")
    g.add_argument("--seed", type=int, default=d if suppress else 0, help="seed for every random choice (default 0)")
    g.add_argument("--budget", type=int, default=d, help="search-node budget for exact solvers")
    g.add_argument("--json", metavar="PATH", default=d, help="write a JSON report")
    g.add_argument("--csv", metavar="PATH", default=d, help="write a CSV report")
    g.add_argument("--quiet", action="store_true", default=d if suppress else False, help="print nothing on success")


def _order_source(p: argparse.ArgumentParser, exact: bool = False) -> None:
    grp = p.add_mutually_exclusive_group()
    if exact:
        grp.add_argument("--exact", action="store_true", help="exact solver (default)")
    grp.add_argument("--order", metavar="FILE", help="evaluate the order in FILE")
    grp.add_argument("--heuristic", choices=HEURISTICS, help="evaluate a heuristic order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gencol", description="Generalised colouring numbers of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, **kw):
        p = sub.add_parser(name, help=help_text, description=help_text, **kw)
        _global_flags(p, suppress=True)
        return p

    p = add("compute", "compute or bound wcol_r, col_r or adm_r")
    p.add_argument("number", choices=sorted(EVALUATORS))
    p.add_argument("graph")
    p.add_argument("-r", type=int, required=True)
    _order_source(p, exact=True)
    p.add_argument("--witness", metavar="FILE", help="write the attaining order")
    p.set_defaults(func=cmd_compute)

    p = add("order", "build a heuristic order and evaluate it")
    p.add_argument("graph")
    p.add_argument("-r", type=int, default=1)
    p.add_argument("--heuristic", choices=HEURISTICS, default="degeneracy")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_order, order=None)

    p = add("gen", "generate graphs")
    gen = p.add_subparsers(dest="kind", required=True, metavar="KIND")
    q = gen.add_parser("gkr", help="extremal bounded-treewidth family")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("-r", type=int, required=True)
    q.add_argument("--out", metavar="PREFIX", help="write PREFIX.edges and PREFIX.td")
    q.add_argument("--estimate", action="store_true", help="only report the vertex count")
    q.add_argument("--cap", type=int, default=250_000, help="refuse larger instances")
    q = gen.add_parser("named", help="a named graph")
    q.add_argument("name")
    q.add_argument("--out", metavar="FILE")
    q = gen.add_parser("subdivide", help="replace each edge by a path with S inner vertices")
    q.add_argument("graph")
    q.add_argument("-s", type=int, required=True)
    q.add_argument("--out", metavar="FILE")
    q = gen.add_parser("complement", help="complement graph")
    q.add_argument("graph")
    q.add_argument("--out", metavar="FILE")
    for q in gen.choices.values():
        _global_flags(q, suppress=True)
    p.set_defaults(func=cmd_gen)

    p = add("td", "tree decompositions")
    p.add_argument("action", choices=("validate", "smooth", "order"))
    p.add_argument("graph")
    p.add_argument("td", help="decomposition file (PACE-style)")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--root", type=int, help="0-based node to root at (order)")
    p.add_argument("-r", type=int, help="also certify the binomial bound at this radius (order)")
    p.set_defaults(func=cmd_td)

    p = add("cover", "neighbourhood covers")
    cov = p.add_subparsers(dest="action", required=True, metavar="ACTION")
    q = cov.add_parser("build", help="cover from a weak-reach order")
    q.add_argument("graph")
    q.add_argument("-r", type=int, required=True)
    _order_source(q)
    q.add_argument("--out", metavar="FILE")
    q = cov.add_parser("check", help="validate a cover file")
    q.add_argument("graph")
    q.add_argument("cover")
    q.add_argument("-r", type=int, required=True)
    q = cov.add_parser("project", help="restrict a cover of a subdivision to the original vertices")
    q.add_argument("graph", help="the subdivided graph")
    q.add_argument("base", help="the original graph")
    q.add_argument("cover")
    q.add_argument("-s", type=int, required=True)
    q.add_argument("-r", type=int, required=True, help="radius to validate the projection at")
    q.add_argument("--out", metavar="FILE")
    for q in cov.choices.values():
        _global_flags(q, suppress=True)
    p.set_defaults(func=cmd_cover)

    p = add("reduce", "hardness reduction")
    red = p.add_subparsers(dest="kind", required=True, metavar="KIND")
    q = red.add_parser("bcbs", help="balanced biclique to weak 3-colouring")
    q.add_argument("graph", help="a bipartite graph")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("--out", metavar="PREFIX", help="write PREFIX.edges and PREFIX.json")
    q.add_argument("--verify", action="store_true", help="solve both sides exactly")
    _global_flags(q, suppress=True)
    p.set_defaults(func=cmd_reduce)

    p = add("tgrad", "topological greatest reduced average density (brute force)")
    p.add_argument("graph")
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=cmd_tgrad)

    p = add("exp", "experiments")
    ex = p.add_subparsers(dest="kind", required=True, metavar="KIND")
    for name, text in (
        ("girth-lb", "mean weak reach on regular graphs of large girth"),
        ("cauchy", "strong layer inequality on graphs of large girth"),
        ("adm-bound", "admissibility against cubed top-grad"),
    ):
        q = ex.add_parser(name, help=text)
        q.add_argument("graph")
        q.add_argument("-r", type=int, required=True)
        q.add_argument("--samples", type=int, default=1000)
        q.add_argument("--jobs", type=int, default=1, help="worker processes")
        _global_flags(q, suppress=True)
    p.set_defaults(func=cmd_exp)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return args


def _write_reports(run: Run) -> None:
    args = run.args
    if args.json:
        Path(args.json).write_text(json.dumps(run.report(), indent=2, sort_keys=True) + "\n")
    if args.csv:
        rows = run.rows or [{k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in _plain(run.values).items()}]
        fields = list(rows[0])
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            writer.writerows(rows)


def main(argv=None) -> int:
    args = parse_args(argv)
    name = args.command
    sub = getattr(args, "kind", None) or getattr(args, "action", None) or getattr(args, "number", None)
    run = Run(f"{name} {sub}" if sub else name, args)
    try:
        args.func(args, run)
        _write_reports(run)
    except InputError as exc:
        print(f"gencol: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"gencol: budget exhausted: {exc} (bounds {exc.lower}..{exc.upper})", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"gencol: invariant violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except OSError as exc:
        print(f"gencol: {exc}", file=sys.stderr)
        return EXIT_IO
    if not args.quiet or not run.ok:
        for line in run.lines:
            print(line)
    return 0 if run.ok else 1


if __name__ == "__main__":
    sys.exit(main())
