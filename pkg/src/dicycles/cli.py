"""Command-line interface: ``dicycles <command> [options]``.

Exit status is 0 on completion, 2 when a refutation candidate turns up and 1
on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .digraph import (
    format_dot,
    format_edge_list,
    girth,
    is_strongly_connected,
    min_indegree,
    min_outdegree,
    read_edge_list,
    strong_connectivity,
)
from .generators import (
    bipartite_tournament_sets,
    even_params,
    gen_bipartite_tournament,
    gen_circular,
    gen_complete_symmetric,
    gen_directed_cycle,
    gen_even_girth,
    gen_odd_girth,
    gen_random_min_outdegree,
    layer_sets,
    odd_params,
    pad_sources,
)
from .harness import (
    random_search,
    verify_bt,
    verify_conjecture3_instance,
    verify_corollary2_instance,
    verify_theorem2_instance,
)
from .packing import DEFAULT_BUDGET, PremiseUnverified, counting_bound, max_disjoint_cycles
from .paths import longest_path_exact
from .probes import counterexample_filter

FAMILIES = ("even", "odd", "bipartite-tournament", "circular", "complete", "cycle", "random")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"family {args.family!r} needs {flags}")


def load_graph(args):
    """Digraph from ``--input`` or the family flags, plus optional source padding."""
    if args.input is not None:
        if args.family is not None:
            raise UsageError("use either --input or --family, not both")
        D = read_edge_list(args.input)
    else:
        fam = args.family
        if fam is None:
            raise UsageError("an --input file or a --family is required")
        if fam == "even":
            _need(args, "g", "k")
            D = gen_even_girth(args.g, args.k, args.c)
        elif fam == "odd":
            _need(args, "g", "k")
            D = gen_odd_girth(args.g, args.k, args.variant)
        elif fam == "bipartite-tournament":
            _need(args, "h")
            D = gen_bipartite_tournament(args.h)
        elif fam == "circular":
            _need(args, "p", "g")
            D = gen_circular(args.p, args.g)
        elif fam == "complete":
            _need(args, "m")
            D = gen_complete_symmetric(args.m)
        elif fam == "cycle":
            _need(args, "m")
            D = gen_directed_cycle(args.m)
        else:
            _need(args, "m", "delta")
            D = gen_random_min_outdegree(args.m, args.delta, args.seed)
    if args.pad_sources:
        if args.pad_degree is None:
            raise UsageError("--pad-sources needs --pad-degree")
        D = pad_sources(D, args.pad_sources, args.pad_degree, args.seed)
    return D


def _add_graph_args(p):
    g = p.add_argument_group("input digraph")
    g.add_argument("--input", metavar="FILE", help="edge-list file")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--g", type=int, help="girth target")
    g.add_argument("--k", type=int, help="packing target")
    g.add_argument("--c", type=int, default=0, help="shift constant (even family)")
    g.add_argument("--h", type=int, help="out-degree (bipartite tournament)")
    g.add_argument("--p", type=int, help="step count (circular)")
    g.add_argument("--m", type=int, help="vertex count (complete, cycle, random)")
    g.add_argument("--delta", type=int, help="out-degree (random)")
    g.add_argument("--variant", choices=("with_chord", "without_chord"), default="with_chord")
    g.add_argument("--pad-sources", type=int, default=0, metavar="S")
    g.add_argument("--pad-degree", type=int, metavar="D")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit JSON (default for most commands)")


def cmd_generate(args, out):
    D = load_graph(args)
    text = format_edge_list(D)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_dot(D))
    return 0


def analyze(D) -> dict:
    cert = girth(D)
    info = {
        "vertex_count": D.vertex_count,
        "arc_count": D.arc_count,
        "min_outdegree": min_outdegree(D),
        "min_indegree": min_indegree(D),
        "max_outdegree": max((D.out_degree(v) for v in D.vertices()), default=0),
        "max_indegree": max((D.in_degree(v) for v in D.vertices()), default=0),
        "girth": cert.as_dict()["girth"],
        "girth_witness": list(cert.witness),
        "strongly_connected": is_strongly_connected(D),
        "strong_connectivity": strong_connectivity(D) if D.vertex_count >= 2 else None,
    }
    return info


def cmd_analyze(args, out):
    info = analyze(load_graph(args))
    if args.json:
        out.write(_dump(info))
    else:
        for key in sorted(info):
            out.write(f"{key}: {info[key]}\n")
    return 0


def _bound_set(args, D):
    spec = args.bound_set
    if spec in ("x-layer", "y-layer"):
        if args.input is not None:
            raise UsageError(f"--bound-set {spec} needs a generated family")
        if args.family in ("even", "odd"):
            params = even_params(args.g, args.k, args.c) if args.family == "even" else odd_params(args.g, args.k)
            sets = layer_sets(params)
        elif args.family == "bipartite-tournament":
            sets = bipartite_tournament_sets(args.h)
        else:
            raise UsageError(f"--bound-set {spec} is undefined for family {args.family!r}")
        return list(sets[0] if spec == "x-layer" else sets[1])
    try:
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --bound-set {spec!r}") from None


def cmd_pack(args, out):
    D = load_graph(args)
    hint = None
    bound_info = None
    if args.bound_mode != "none":
        if args.bound_set is None or args.bound_q is None:
            raise UsageError("--bound-mode needs --bound-set and --bound-q")
        S = _bound_set(args, D)
        try:
            hint = counting_bound(D, S, args.bound_q, args.bound_mode)
        except PremiseUnverified as exc:
            raise UsageError(f"counting bound premise not established: {exc}") from None
        bound_info = {"mode": args.bound_mode, "q": args.bound_q, "size": len(S), "value": hint}
    P = max_disjoint_cycles(D, args.budget, upper_hint=hint, max_len=args.max_len)
    result = P.as_dict()
    if bound_info is not None:
        result["counting_bound"] = bound_info
    out.write(_dump(result))
    return 0


def cmd_longest_path(args, out):
    cert = longest_path_exact(load_graph(args), args.budget)
    out.write(_dump(cert.as_dict()))
    return 0


def cmd_probe(args, out):
    out.write(_dump(counterexample_filter(load_graph(args)).as_dict()))
    return 0


def cmd_verify(args, out):
    which = args.claim
    if which == "theorem2":
        if args.g is None or args.k is None:
            raise UsageError("verify theorem2 needs --g and --k")
        rep = verify_theorem2_instance(args.g, args.k, args.t, args.c, args.budget)
    elif which == "corollary2":
        if args.k is None:
            raise UsageError("verify corollary2 needs --k")
        rep = verify_corollary2_instance(args.k, args.budget)
    elif which == "conjecture3":
        if args.g is None or args.k is None:
            raise UsageError("verify conjecture3 needs --g and --k")
        rep = verify_conjecture3_instance(args.g, args.k)
    else:
        if args.k is None:
            raise UsageError("verify bt needs --k")
        bt_k = args.k
        if args.family is not None and args.family in ("even", "odd"):
            raise UsageError("verify bt takes --input or a non-layered family")
        D = load_graph(args)
        rep = verify_bt(D, bt_k, args.budget, instance=args.input or args.family)
    if args.json:
        out.write(rep.to_json())
    else:
        out.write(f"{rep.instance}\n")
        for c in rep.claims:
            line = f"  {c.conjecture}: {c.verdict} (predicted {c.predicted}, measured {c.measured})"
            if c.note:
                line += f"  [{c.note}]"
            out.write(line + "\n")
    return 2 if rep.refutation_candidate else 0


def cmd_search(args, out):
    summary = random_search(
        args.k, args.m, args.trials, args.seed, args.budget, args.out_dir, args.delta
    )
    out.write(_dump(summary))
    return 2 if summary["candidates"] else 0


def build_parser():
    parser = _Parser(prog="dicycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write a family member as an edge list")
    _add_graph_args(p)
    p.add_argument("--output", metavar="FILE")
    p.add_argument("--dot", metavar="FILE", help="also write Graphviz DOT")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="degrees, girth and strong connectivity")
    _add_graph_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pack", help="maximum vertex-disjoint cycle packing")
    _add_graph_args(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-len", type=int)
    p.add_argument("--bound-mode", choices=("none", "certified", "enumerative"), default="none")
    p.add_argument("--bound-set", help="comma-separated vertices, or x-layer / y-layer")
    p.add_argument("--bound-q", type=int)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("longest-path", help="exact longest simple path")
    _add_graph_args(p)
    p.add_argument("--budget", type=int, default=50_000_000)
    p.set_defaults(func=cmd_longest_path)

    p = sub.add_parser("probe", help="structural necessary-condition filter")
    _add_graph_args(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("verify", help="check one conjecture instance")
    p.add_argument("claim", choices=("theorem2", "corollary2", "conjecture3", "bt"))
    _add_graph_args(p)
    p.add_argument("--t", type=int, default=0, help="deficiency")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="seeded random sweep for small-k counterexamples")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--delta", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out-dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, OSError) as exc:
        sys.stderr.write(f"dicycles: error: {exc}\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
