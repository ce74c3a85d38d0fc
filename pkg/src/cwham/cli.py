"""Command-line front end.

Exit codes: 0 = Hamiltonian / valid / trail exists, 1 = the negative answer,
2 = usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .baseline import naive_solve
from .cmgraph import find_trail, parse_edge_list, trail_exists
from .dsolver import solve_directed
from .gen import FAMILIES, BadParameters, gen_family, gen_random_expr
from .kexpr import ExprError, check_irredundant, parse, unparse
from .report import BenchRow, plot_bench, write_csv
from .solver import solve
from .solver.engine import SolveResult

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_expr(path: str, directed: bool):
    return parse(_read(path), "directed" if directed else "undirected")


def _run_solver(expr, engine: str, certificate: bool) -> SolveResult:
    if engine == "naive":
        return naive_solve(expr, certificate=certificate)
    if expr.directed:
        return solve_directed(expr, certificate=certificate)
    return solve(expr, certificate=certificate)


def cmd_solve(args) -> int:
    expr = _load_expr(args.expr, args.directed)
    res = _run_solver(expr, args.engine, args.certificate)
    if args.json:
        print(json.dumps(res.to_dict()))
    else:
        print("hamiltonian" if res.hamiltonian else "not hamiltonian")
        if res.cycle:
            print("cycle:", " ".join(res.cycle))
        if res.witness:
            w = res.witness
            print(f"witness: node {w.node}, labels {w.i} {w.j}")
        s = res.stats
        print(f"n={s.n} k={s.k} nodes={s.nodes} max_states={s.max_repset} "
              f"reduce_calls={s.reduce_calls} elapsed_ms={s.elapsed_ms} engine={res.engine}")
    return EXIT_YES if res.hamiltonian else EXIT_NO


def cmd_validate(args) -> int:
    expr = _load_expr(args.expr, args.directed)
    bad = check_irredundant(expr)
    edge_ops = sum(1 for nd in expr.nodes if type(nd).__name__ in ("Eta", "Arc"))
    if not bad:
        print(f"irredundant: {len(expr)} nodes, {expr.n} vertices, {edge_ops} edge operations")
        return EXIT_YES
    for r in bad:
        print(f"node {r.node}: {r.kind} redundant ({r.i},{r.j}), "
              f"{r.existing} of {r.total} pairs already adjacent")
    return EXIT_NO


def cmd_gen(args) -> int:
    mode = "directed" if args.directed else "undirected"
    if args.family == "random":
        expr = gen_random_expr(args.n, args.k, args.seed, mode)
    else:
        expr = gen_family(args.family, args.n, mode)
    text = unparse(expr) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_YES


def cmd_trail(args) -> int:
    g = parse_edge_list(_read(args.edges), directed=args.directed)
    if not trail_exists(g):
        print("no alternating Eulerian trail")
        return EXIT_NO
    trail = find_trail(g)
    arrow = " -> " if g.directed else " - "
    steps = [f"{trail.vertices[t]}{arrow}[{g.edges[e].color.value}]"
             for t, e in enumerate(trail.edges)]
    print("trail:", " ".join(steps) + (f" {trail.vertices[0]}" if trail.edges else ""))
    return EXIT_YES


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def cmd_bench(args) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in engines:
        if e not in ("rep", "naive"):
            raise InputError(f"unknown engine {e!r}")
    mode = "directed" if args.directed else "undirected"
    rows = []
    for n in args.n_list:
        if args.family == "random":
            expr = gen_random_expr(n, args.k, args.seed, mode)
        else:
            expr = gen_family(args.family, n, mode)
        for engine in engines:
            if engine == "naive" and args.naive_max_n and n > args.naive_max_n:
                continue
            res = _run_solver(expr, engine, False)
            rows.append(BenchRow(engine, n, res.stats.k, res.stats.max_repset,
                                 res.stats.elapsed_ms, res.hamiltonian))
            if not args.quiet:
                print(f"{engine:5s} n={n:<6d} max_states={res.stats.max_repset:<8d} "
                      f"{res.stats.elapsed_ms} ms", file=sys.stderr)
    write_csv(rows, args.csv)
    if args.plot:
        plot_bench(rows, args.plot, title=f"{args.family} family")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cwham",
                                description="Hamiltonian Cycle on clique-width expressions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide Hamiltonicity of an expression")
    s.add_argument("--expr", required=True, help=".cwx file, or - for stdin")
    s.add_argument("--directed", action="store_true")
    s.add_argument("--engine", choices=("rep", "naive"), default="rep")
    s.add_argument("--certificate", action="store_true", help="also return a cycle")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("validate", help="parse and report redundant edge operations")
    v.add_argument("--expr", required=True)
    v.add_argument("--directed", action="store_true")
    v.set_defaults(func=cmd_validate)

    g = sub.add_parser("gen", help="write a generated expression")
    g.add_argument("--family", required=True, choices=FAMILIES + ("random",))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=3, help="labels for the random family")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--directed", action="store_true")
    g.add_argument("-o", "--output", required=True, help="output file, or - for stdout")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("trail", help="alternating Eulerian trail of a red/blue multigraph")
    t.add_argument("--edges", required=True, help="edge list: 'red 1 2' per line")
    t.add_argument("--directed", action="store_true")
    t.set_defaults(func=cmd_trail)

    b = sub.add_parser("bench", help="time engines over a family")
    b.add_argument("--family", required=True, choices=FAMILIES + ("random",))
    b.add_argument("--n-list", required=True, type=_int_list)
    b.add_argument("--engines", default="rep,naive")
    b.add_argument("--k", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--directed", action="store_true")
    b.add_argument("--naive-max-n", type=int, default=0,
                   help="skip the naive engine above this n (0 = never skip)")
    b.add_argument("--csv", required=True)
    b.add_argument("--plot", help="also write a log-log figure (png, pdf, svg)")
    b.add_argument("--quiet", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExprError, BadParameters, InputError, ValueError, OSError) as exc:
        print(f"cwham: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
