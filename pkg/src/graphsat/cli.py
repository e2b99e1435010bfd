"""Command-line entry point: ``graphsat <subcommand> ...``.

Graphs are named with a small expression language::

    double_star(4,5)  p5(1)  star(5)  path(4)  cycle(5)  clique(4)  empty(3)  paw
    fig1a fig1b fig2a fig2b fig3a fig3b fig4
    <graph6 literal>   <file path>   -   (graph6 or edge-list text on stdin)

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Callable, Optional, Sequence

from . import bounds, constructions as cons, graph as gr, oracle, saturation, weights

ENV_THREADS = "GRAPHSAT_THREADS"


class SpecError(ValueError):
    """A graph expression that names no graph."""


_FAMILIES: dict[str, tuple[int, Callable[..., gr.Graph]]] = {
    "double_star": (2, cons.double_star),
    "p5": (1, cons.caterpillar_p5),
    "star": (1, gr.star),
    "path": (1, gr.path),
    "cycle": (1, gr.cycle),
    "clique": (1, gr.clique),
    "empty": (1, gr.empty_graph),
}

_NAMED: dict[str, Callable[[], gr.Graph]] = {
    "paw": cons.paw,
    "fig1a": lambda: cons.example_kdelta_star(3, 5, 2).graph,
    "fig1b": lambda: cons.example_kdelta_doublestar(3, 5, 2).graph,
    "fig2a": lambda: cons.double_star(4, 5),
    "fig2b": lambda: cons.saturated_double_star(4, 5, 18).graph,
    "fig3a": lambda: cons.caterpillar_p5(1),
    "fig3b": lambda: cons.saturated_shorty(2, 19).graph,
    "fig4": cons.fig4_gadget,
}

_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*\(\s*([0-9,\s]*)\)\s*$")


def _parse_text(text: str) -> gr.Graph:
    stripped = text.strip()
    if re.match(r"^\d+\s+\d+", stripped):
        return gr.parse_edge_list_text(stripped)
    return gr.parse_graph6(stripped)


def parse_graph_spec(spec: str, stdin=None) -> gr.Graph:
    """Turn a graph expression into a :class:`Graph`."""
    m = _CALL.match(spec)
    if m:
        name, raw = m.group(1), m.group(2)
        if name not in _FAMILIES:
            raise SpecError(f"unknown graph family {name!r}")
        arity, fn = _FAMILIES[name]
        args = [int(a) for a in raw.split(",") if a.strip()]
        if len(args) != arity:
            raise SpecError(f"{name} takes {arity} argument(s), got {len(args)}")
        return fn(*args)
    key = spec.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    if spec == "-":
        return _parse_text((stdin or sys.stdin).read())
    if os.path.isfile(spec):
        with open(spec) as fh:
            return _parse_text(fh.read())
    try:
        return gr.parse_graph6(spec)
    except gr.Graph6Error as exc:
        raise SpecError(f"cannot read {spec!r} as a graph name, file or graph6 string ({exc})") from exc


def _default_threads() -> int:
    env = os.environ.get(ENV_THREADS)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _render_graph(g: gr.Graph, fmt: str, labels: Optional[dict[int, str]] = None) -> str:
    if fmt == "g6":
        return gr.emit_graph6(g).decode()
    if fmt == "dot":
        return gr.to_dot(g, labels).rstrip("\n")
    return gr.to_edge_list_text(g).rstrip("\n")


# --- subcommands ----------------------------------------------------------

def cmd_weights(args, out) -> int:
    s = weights.weight_summary(parse_graph_spec(args.graph))
    if args.json:
        print(_dump(s.to_dict()), file=out)
        return 0
    print(f"k0={s.k0} k1={s.k1} k0p={s.k0p} k1p={s.k1p} min_wt_cp={s.min_wt_cp}", file=out)
    print("edge      wt_cp  wt0  wt1", file=out)
    for e in s.per_edge:
        print(f"{str(e.edge):<9} {e.wt_cp:>5} {e.wt0:>4} {e.wt1:>4}", file=out)
    return 0


def _bound_reports(h: gr.Graph, n: int, which: str) -> list[bounds.BoundReport]:
    if which == "best":
        return [bounds.best_lower_bound(h, n)]
    if which == "double-star":
        st = oracle.recognize_double_star(h)
        if st is None:
            raise bounds.BoundError("pattern is not a double star")
        return bounds.double_star_bounds(st[0], st[1], n)
    if which == "shorty":
        s = oracle.recognize_caterpillar_p5(h)
        if s is None:
            raise bounds.BoundError("pattern is not a caterpillar P_5^s")
        return bounds.shorty_bounds(s + 1, n)
    summary = weights.weight_summary(h)
    if which == "cp":
        return [bounds.cp_lower_bound(summary, n)]
    if which == "general":
        return bounds.general_lower_bound(summary, n)
    return bounds.triangle_free_lower_bound(summary, gr.is_triangle_free(h), n)


def cmd_bound(args, out) -> int:
    reports = _bound_reports(parse_graph_spec(args.graph), args.n, args.which)
    if args.json:
        print(_dump([r.to_dict() for r in reports]), file=out)
        return 0
    for r in reports:
        if not r.applicable:
            print(f"{r.name}: not applicable ({r.reason})", file=out)
            continue
        const = "unknown" if r.constant is None else str(r.constant)
        print(f"{r.name} [{r.kind}] slope={r.slope} constant={const} value={r.value} "
              f"(~{float(r.value):.4f}, ceil {r.ceil_value})", file=out)
    return 0


def _build(args) -> cons.ConstructionReport | gr.Graph:
    name = args.name

    def need(*fields):
        missing = [f for f in fields if getattr(args, f) is None]
        if missing:
            raise SpecError(f"construct {name} needs --{' --'.join(missing)}")
        return [getattr(args, f) for f in fields]

    if name == "saturated-double-star":
        return cons.saturated_double_star(*need("s", "t", "n"))
    if name == "saturated-shorty":
        return cons.saturated_shorty(*need("s", "n"))
    if name == "kdelta-star":
        return cons.example_kdelta_star(*need("delta", "k", "ell"))
    if name == "kdelta-doublestar":
        return cons.example_kdelta_doublestar(*need("delta", "k", "ell"))
    if name == "ehm":
        return cons.ehm_construction(*need("t", "n"))
    if name == "double-star":
        return cons.double_star(*need("s", "t"))
    if name == "p5":
        return cons.caterpillar_p5(*need("s"))
    return cons.fig4_gadget()


def cmd_construct(args, out) -> int:
    built = _build(args)
    if isinstance(built, gr.Graph):
        g, labels, meta = built, None, {"name": args.name, "order": built.order, "size": built.size}
        if args.name == "fig4":
            labels = dict(enumerate(cons.FIG4_LABELS))
    else:
        g, labels, meta = built.graph, built.labels(), built.to_dict()
    text = _render_graph(g, args.out, labels)
    if args.json:
        meta = dict(meta, format=args.out, graph=text)
        print(_dump(meta), file=out)
    else:
        print(text, file=out)
    return 0


def cmd_verify(args, out) -> int:
    host = parse_graph_spec(args.host)
    pattern = parse_graph_spec(args.pattern)
    verdict = saturation.is_h_saturated(host, pattern, workers=args.threads)
    if args.json:
        print(_dump(verdict.to_dict()), file=out)
        return 0
    print(f"free: {verdict.is_free}", file=out)
    print(f"saturated: {verdict.is_saturated}", file=out)
    if args.explain:
        if verdict.free_witness is not None:
            print(f"copy of pattern (pattern vertex -> host vertex): {list(verdict.free_witness)}", file=out)
        if verdict.maximality_counterexample is not None:
            x, y = verdict.maximality_counterexample
            print(f"adding {x}-{y} creates no copy of the pattern", file=out)
    return 0


def cmd_sat(args, out) -> int:
    h = parse_graph_spec(args.pattern)
    res = oracle.brute_force_sat(args.n, h, args.max_edges, audit=args.audit, workers=args.threads)
    print(_dump(res.to_dict()), file=out)
    return 0


def cmd_convert(args, out) -> int:
    print(_render_graph(parse_graph_spec(args.graph), args.out), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphsat", description="Graph saturation toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, threads=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if threads:
            sp.add_argument("--threads", type=int, default=_default_threads(),
                            help=f"worker processes (default: ${ENV_THREADS} or CPU count)")

    sp = sub.add_parser("weights", help="edge weights and k-constants of a pattern")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("bound", help="lower/upper bounds on sat(n, H)")
    sp.add_argument("graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--which", default="best",
                    choices=["cp", "general", "triangle-free", "double-star", "shorty", "best"])
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("construct", help="build a named construction")
    sp.add_argument("name", choices=["saturated-double-star", "saturated-shorty", "kdelta-star",
                                     "kdelta-doublestar", "ehm", "double-star", "p5", "fig4"])
    for flag in ("s", "t", "n", "delta", "k", "ell"):
        sp.add_argument(f"--{flag}", type=int)
    sp.add_argument("--out", choices=["g6", "dot", "edges"], default="g6")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="decide whether a host graph is pattern-saturated")
    sp.add_argument("--host", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--explain", action="store_true")
    common(sp, threads=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sat", help="exact sat(n, H) by exhaustive search (n <= 9)")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-edges", type=int, default=None)
    sp.add_argument("--audit", action="store_true", help="start the sweep at 0 edges")
    common(sp, threads=True)
    sp.set_defaults(func=cmd_sat)

    sp = sub.add_parser("convert", help="re-emit a graph in another format")
    sp.add_argument("graph")
    sp.add_argument("--out", choices=["g6", "dot", "edges"], default="g6")
    common(sp)
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except SpecError as exc:
        print(f"graphsat: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"graphsat: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
