"""Command-line entry point.

Exit status: 0 when every requested check passes, 1 on a failed check or an
I/O error, 2 on a usage error.
"""

import argparse
import json
import sys

from . import export, graphs, verifier, worked
from .compositions import display, is_composition, parse
from .phi import phi_table, verify_phi

PAIRS = ("rc-qc", "lc-qc", "rc-qct", "lc-qct")


def _rank(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    clamped = min(max(n, 0), graphs.MAX_RANK_CAP)
    if clamped != n:
        print(f"note: rank bound {n} clamped to {clamped}", file=sys.stderr)
    return clamped


def _alpha(text):
    try:
        alpha = parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not is_composition(alpha):
        raise argparse.ArgumentTypeError(f"{text!r} has a zero part; give a composition")
    return alpha


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _print_checks(checks, as_json):
    if as_json:
        print(json.dumps([c.to_json() for c in checks], indent=2, default=str))
    else:
        for c in checks:
            print(c.line())
            if not c.passed:
                print(f"  first counterexample: {json.dumps(c.counterexample, default=str)}")
    return 0 if all(c.passed for c in checks) else 1


def cmd_build(args):
    G = graphs.build(args.graph, args.max_rank)
    text = export.export_graph(G, args.format, simple_edges=args.simple_edges)
    _emit(text if text.endswith("\n") else text + "\n", args.output)
    return 0


def cmd_export(args):
    G = graphs.build(args.graph, args.max_rank)
    _emit(export.export_graph(G, args.format, simple_edges=args.simple_edges), args.output)
    print(f"wrote {G.name} (max rank {G.max_rank}, {G.num_edges()} edges) to {args.output}", file=sys.stderr)
    return 0


def cmd_verify(args):
    pairs = PAIRS if args.pair == "all" else (args.pair,)
    checks = []
    for pair in pairs:
        if pair.endswith("qct"):
            n = args.max_size if args.max_size is not None else 7
            checks.append(verifier.verify_dual_filtered(pair, n))
        else:
            n = args.max_size if args.max_size is not None else 8
            checks.append(verifier.verify_dual_graded(pair, n))
    status = _print_checks(checks, args.json)
    if args.survey is not None:
        survey = graphs.multiplicity_survey(args.survey)
        if args.json:
            print(json.dumps(survey, default=str))
        else:
            print(f"Q~_c multiplicity survey up to size {args.survey}: "
                  f"{survey['edges']} edges, by multiplicity {survey['by_multiplicity']}")
    return status


def cmd_relations(args):
    names = args.relation or list(verifier.RELATIONS) + ["zero-contribution"]
    checks = []
    for name in names:
        if name == "zero-contribution":
            checks.append(verifier.verify_zero_contribution(args.max_part, args.max_len, args.max_index))
        elif name in verifier.RELATIONS:
            checks.append(verifier.verify_relation(name, args.max_part, args.max_len, args.max_index))
        else:
            print(f"unknown relation {name!r}", file=sys.stderr)
            return 2
    return _print_checks(checks, args.json)


def cmd_phi_table(args):
    alpha = args.alpha
    rows = phi_table(alpha)
    report = verify_phi(alpha)
    if args.json:
        print(json.dumps({
            "alpha": list(alpha),
            "rows": rows,
            "sizes": report.sizes,
            "clauses": {k: ok for k, (ok, _) in report.clauses.items()},
        }, indent=2))
    else:
        print(f"alpha = {display(alpha)}   |X|={report.sizes['X']} |Y|={report.sizes['Y']} "
              f"|Z|={report.sizes['Z']} |P|={report.sizes['P']} |Q|={report.sizes['Q']}")
        if rows:
            w1 = max(len(r["w"]) for r in rows)
            w2 = max(len(r["phi_w"]) for r in rows)
            for r in rows:
                print(f"  {r['w']:<{w1}}  ->  {r['phi_w']:<{w2}}   "
                      f"w(alpha)={display(tuple(r['w_alpha']))}  "
                      f"Phi(w)(alpha)={display(tuple(r['phi_w_alpha']))}  case {r['case']}")
        for name, (ok, witness) in report.clauses.items():
            print(f"{'PASS' if ok else 'FAIL'}: {name}" + ("" if ok else f"  {witness}"))
    return 0 if report.passed else 1


def cmd_examples(args):
    results = worked.replay()
    if args.json:
        print(json.dumps(results, indent=2))
    else:
        for r in results:
            mark = "PASS" if r["passed"] else "FAIL"
            print(f"{mark}: {r['name']}: {r['got']}" + ("" if r["passed"] else f" (expected {r['expected']})"))
        print(f"{sum(r['passed'] for r in results)}/{len(results)} worked examples reproduced")
    return 0 if all(r["passed"] for r in results) else 1


def cmd_compare_fixtures(args):
    reports = []
    for name, graph in export.FIXTURES.items():
        G = graphs.build(graph, 4)
        reports.append(export.compare_fixture(G, export.load_fixture(name)))
    if args.json:
        print(json.dumps(reports, default=list, indent=2))
    else:
        for r in reports:
            mark = "PASS" if r["passed"] else "FAIL"
            print(f"{mark}: {r['fixture']}: built {r['built_edges']} edges, fixture {r['fixture_edges']}"
                  + ("" if r["passed"] else f", missing {r['missing']}, extra {r['extra']}"))
    return 0 if all(r["passed"] for r in reports) else 1


def make_parser():
    p = argparse.ArgumentParser(prog="compdual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_opts(sp, output_required=False):
        sp.add_argument("--graph", choices=sorted(graphs.BUILDERS), default="rc")
        sp.add_argument("--max-rank", type=_rank, default=6,
                        help=f"largest composition size (default 6, clamped to [0, {graphs.MAX_RANK_CAP}])")
        sp.add_argument("--format", choices=export.FORMATS, default="json")
        sp.add_argument("--simple-edges", action="store_true",
                        help="collapse edge multiplicities to 1")
        sp.add_argument("-o", "--output", required=output_required,
                        help="output path" + ("" if output_required else " (default stdout)"))

    sp = sub.add_parser("build", help="build a graph and print it")
    graph_opts(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("export", help="build a graph and write it to a file")
    graph_opts(sp, output_required=True)
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("verify", help="check the dual graded / dual filtered identities")
    sp.add_argument("--pair", choices=PAIRS + ("all",), default="all")
    sp.add_argument("--max-size", type=_rank, default=None,
                    help="largest composition size (default 8 for graded pairs, 7 for filtered)")
    sp.add_argument("--survey", type=_rank, default=None, metavar="N",
                    help="also report Q~_c edge multiplicities up to size N")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("relations", help="check the operator relations on weak compositions")
    sp.add_argument("--relation", action="append",
                    help="relation name (a..i or zero-contribution); repeatable; default all")
    sp.add_argument("--max-part", type=int, default=6)
    sp.add_argument("--max-len", type=int, default=5)
    sp.add_argument("--max-index", type=int, default=8)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("phi-table", help="tabulate Phi on Y for one composition")
    sp.add_argument("--alpha", type=_alpha, required=True,
                    help="comma-separated parts, e.g. 2,6,1,4, or 'empty'")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_phi_table)

    sp = sub.add_parser("examples", help="replay every worked example")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_examples)

    sp = sub.add_parser("compare-fixtures", help="compare rank-4 graphs with the figure edge lists")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_compare_fixtures)
    return p


def main(argv=None):
    args = make_parser().parse_args(argv)
    for name in ("max_part", "max_len", "max_index"):
        if getattr(args, name, 1) < 1:
            print(f"--{name.replace('_', '-')} must be >= 1", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
