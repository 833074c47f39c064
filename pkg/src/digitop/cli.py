"""Command-line front end.

Verbs: hyperspace, check, verify, girth, dominate, metrics, export-dot.
Exit codes: 0 success, 1 verification/check failure, 2 usage or parse
error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphmetrics as gm
from .errors import BudgetError
from .functions import (continuity_counterexample, family_function_from_json,
                        function_from_json, function_to_json, is_isomorphism,
                        is_retraction, find_inducing_map)
from .homotopy import (PHI, PSI, build_function_graph, homotopic, homotopy_to_json,
                       is_contractible, phi_adjacent, psi_adjacent,
                       strongly_homotopic, verify_homotopy)
from .hyperspace import (enumerate_all_subsets, enumerate_connected_subsets,
                         hyperspace_graph)
from .lattice import image_from_json
from .multivalued import (generates, has_weak_continuity,
                          is_connectivity_preserving, is_egs_continuous,
                          multifunction_from_json, strong_continuity_counterexample,
                          Subdivision)
from .verify import run_suites

CHECKS = (
    "continuity", "isomorphism", "retraction",
    "phi-adjacent", "psi-adjacent", "homotopic", "strongly-homotopic",
    "contractible", "weak-continuity", "strong-continuity",
    "connectivity-preserving", "egs-continuous", "induced-by",
)


def _load(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _point_doc(p):
    return list(p)


def _member_doc(m):
    return [list(p) for p in sorted(m)]


def _view_graph(args) -> gm.FiniteGraph:
    image = image_from_json(_load(args.input))
    view = args.view
    if view == "image":
        return gm.as_finite_graph(image)
    if view == "full":
        return gm.as_finite_graph(hyperspace_graph(
            enumerate_all_subsets(image, args.budget_hyperspace)))
    if view == "connected":
        return gm.as_finite_graph(hyperspace_graph(
            enumerate_connected_subsets(image, args.budget_hyperspace)))
    if view == "functions":
        codomain = image_from_json(_load(args.codomain)) if args.codomain else image
        return gm.as_finite_graph(build_function_graph(
            image, codomain, args.flavor, args.budget_functions))
    raise ValueError(f"unknown view {view!r}")


def cmd_hyperspace(args) -> int:
    image = image_from_json(_load(args.input))
    build = enumerate_all_subsets if args.kind == "full" else enumerate_connected_subsets
    family = build(image, args.budget_hyperspace)
    view = hyperspace_graph(family)
    graph = gm.as_finite_graph(view)
    if args.format == "dot":
        _emit(args, gm.to_dot(graph))
    elif args.format == "json":
        _emit(args, json.dumps({
            "kind": args.kind,
            "vertices": len(family),
            "edges": len(view.edges),
            "members": [_member_doc(m) for m in family.members],
        }, indent=2) + "\n")
    else:
        _emit(args, f"kind: {args.kind}\nvertices: {len(family)}\nedges: {len(view.edges)}\n")
    return 0


def _run_check(name: str, doc: dict, args):
    """Returns (verdict, witness-json-value)."""
    if name == "continuity":
        f = function_from_json(doc)
        pair = continuity_counterexample(f)
        return pair is None, None if pair is None else {
            "x": _point_doc(pair[0]), "x_prime": _point_doc(pair[1])}
    if name == "isomorphism":
        return is_isomorphism(function_from_json(doc)), None
    if name == "retraction":
        f = function_from_json(doc)
        return is_retraction(f, f.codomain.points), None
    if name in ("phi-adjacent", "psi-adjacent", "homotopic", "strongly-homotopic"):
        f = function_from_json(doc["f"])
        g = function_from_json(doc["g"])
        if name == "phi-adjacent":
            ok = phi_adjacent(f, g)
            if ok:
                return True, None
            bad = [(x, y) for x, y in f.pairs
                   if not f.codomain.adjacent_or_equal(y, g.table[x])]
            return False, {"x": _point_doc(bad[0][0])} if bad else {"equal": True}
        if name == "psi-adjacent":
            from .homotopy import psi_counterexample

            ok = psi_adjacent(f, g)
            if ok:
                return True, None
            pair = psi_counterexample(f, g)
            return False, ({"x0": _point_doc(pair[0]), "x1": _point_doc(pair[1])}
                           if pair else {"equal": True})
        decide = homotopic if name == "homotopic" else strongly_homotopic
        decision = decide(f, g, budget=args.budget_functions)
        if not decision:
            return False, None
        table = decision.table()
        mode = "plain" if name == "homotopic" else "strong"
        if not verify_homotopy(table, f, g, mode=mode):
            raise RuntimeError("internal error: witness failed re-validation")
        return True, homotopy_to_json(table)
    if name == "contractible":
        return is_contractible(image_from_json(doc), args.budget_functions), None
    if name in ("weak-continuity", "strong-continuity", "connectivity-preserving",
                "egs-continuous"):
        F = multifunction_from_json(doc)
        if name == "weak-continuity":
            return has_weak_continuity(F), None
        if name == "strong-continuity":
            bad = strong_continuity_counterexample(F)
            return bad is None, None if bad is None else {
                "x": _point_doc(bad[0]), "y": _point_doc(bad[1]),
                "unmatched": _point_doc(bad[2])}
        if name == "connectivity-preserving":
            return is_connectivity_preserving(F, args.budget_hyperspace), None
        result = is_egs_continuous(F, args.r_max, args.budget_subdivision)
        if not result:
            return False, {"r_max": result.r_max}
        if not generates(result.generator, F, Subdivision(F.domain, result.r)):
            raise RuntimeError("internal error: generator failed re-validation")
        return True, {"r": result.r, "generator": function_to_json(result.generator)}
    if name == "induced-by":
        F = family_function_from_json(doc)
        f = find_inducing_map(F, budget=args.budget_functions)
        return f is not None, None if f is None else function_to_json(f)
    raise ValueError(f"unknown check {name!r}")


def cmd_check(args) -> int:
    verdict, witness = _run_check(args.name, _load(args.input), args)
    if args.format == "json":
        _emit(args, json.dumps({"check": args.name, "verdict": verdict,
                                "witness": witness}, indent=2) + "\n")
    else:
        lines = [f"{args.name}: {'true' if verdict else 'false'}"]
        if witness is not None:
            lines.append(f"witness: {json.dumps(witness)}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if verdict else 1


def cmd_verify(args) -> int:
    results = run_suites(args.suite, seed=args.seed,
                         max_points=args.max_points, samples=args.samples)
    lines = [r.line() for r in results]
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed (seed {args.seed})")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if failed == 0 else 1


def cmd_girth(args) -> int:
    graph = _view_graph(args)
    short = gm.girth(graph)
    longest = gm.longest_cycle(graph, args.budget_cycle)
    for witness in (short, longest):
        if witness is not None and not gm.is_valid_cycle(graph, witness.vertices):
            raise RuntimeError("internal error: cycle witness failed re-validation")

    def cycle_doc(w):
        if w is None:
            return None
        return {"length": w.length,
                "vertices": [gm.format_label(graph.label_of(v)) for v in w.vertices]}

    if args.format == "json":
        _emit(args, json.dumps({"girth": cycle_doc(short),
                                "long_cycle": cycle_doc(longest)}, indent=2) + "\n")
    else:
        if short is None:
            _emit(args, "acyclic\n")
        else:
            _emit(args, f"girth: {short.length}\nlong cycle: {longest.length}\n"
                        f"long cycle witness: "
                        f"{' '.join(gm.format_label(graph.label_of(v)) for v in longest.vertices)}\n")
    return 0


def cmd_dominate(args) -> int:
    graph = _view_graph(args)
    best = gm.minimum_dominating_set(graph, args.budget_dominating)
    if not gm.is_dominating(best, graph):
        raise RuntimeError("internal error: dominating set failed re-validation")
    labels = [gm.format_label(graph.label_of(v)) for v in sorted(best)]
    if args.format == "json":
        _emit(args, json.dumps({"size": len(best), "vertices": labels}, indent=2) + "\n")
    else:
        _emit(args, f"minimum dominating set size: {len(best)}\nmembers: {' '.join(labels)}\n")
    return 0


def cmd_metrics(args) -> int:
    graph = _view_graph(args)
    if args.format == "csv":
        _emit(args, gm.metrics_csv(graph))
        return 0
    rad, diam = gm.radius(graph), gm.diameter(graph)
    ctr = sorted(gm.center(graph))
    if args.format == "json":
        _emit(args, json.dumps({
            "vertices": graph.n,
            "edges": graph.edge_count,
            "radius": rad,
            "diameter": diam,
            "center": [gm.format_label(graph.label_of(v)) for v in ctr],
            "eccentricity": {str(v): gm.eccentricity(graph, v) for v in range(graph.n)},
        }, indent=2) + "\n")
    else:
        _emit(args, f"vertices: {graph.n}\nedges: {graph.edge_count}\n"
                    f"radius: {rad}\ndiameter: {diam}\n"
                    f"center: {' '.join(gm.format_label(graph.label_of(v)) for v in ctr)}\n")
    return 0


def cmd_export_dot(args) -> int:
    graph = _view_graph(args)
    highlight = None
    if args.highlight == "girth":
        highlight = gm.girth(graph)
    elif args.highlight == "long-cycle":
        highlight = gm.longest_cycle(graph, args.budget_cycle)
    _emit(args, gm.to_dot(graph, highlight=highlight))
    return 0


def _add_common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--input", required=True, help="path to the JSON input document")
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--output", help="write to this path instead of stdout")
    p.add_argument("--budget-hyperspace", type=int, default=24,
                   help="max image points for hyperspace enumeration")
    p.add_argument("--budget-functions", type=int, default=10 ** 6,
                   help="max raw table count for function enumeration")
    p.add_argument("--budget-cycle", type=int, default=20,
                   help="max vertices for the long-cycle search")
    p.add_argument("--budget-dominating", type=int, default=40,
                   help="max vertices for the dominating-set search")
    p.add_argument("--budget-subdivision", type=int, default=64,
                   help="max subdivision points for the generator search")


def _add_view(p: argparse.ArgumentParser) -> None:
    p.add_argument("--view", choices=("image", "full", "connected", "functions"),
                   default="image", help="which graph of the image to analyze")
    p.add_argument("--flavor", choices=(PHI, PSI), default=PHI,
                   help="edge rule for the functions view")
    p.add_argument("--codomain", help="codomain image JSON for the functions view")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitop",
        description="Exact workbench for digital images, hyperspaces, "
                    "function graphs and their graph metrics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hyperspace", help="enumerate a hyperspace and report its graph")
    _add_common(p, formats=("text", "json", "dot"))
    p.add_argument("--kind", choices=("full", "connected"), default="connected")
    p.set_defaults(func=cmd_hyperspace)

    p = sub.add_parser("check", help="run a named check on a JSON document")
    p.add_argument("name", choices=CHECKS)
    _add_common(p)
    p.add_argument("--r-max", type=int, default=4,
                   help="largest subdivision factor for the generator search")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run the randomized theorem-verification suites")
    p.add_argument("--suite", nargs="+", default=["all"],
                   choices=["all", "cardinality", "induced", "homotopy", "connectivity",
                            "multivalued", "cycles", "dominating", "diameter"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-points", type=int, default=None,
                   help="override the per-suite image size cap")
    p.add_argument("--samples", type=int, default=None,
                   help="override the per-suite sample count")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_verify)

    for verb, fn, extra in (("girth", cmd_girth, ()),
                            ("dominate", cmd_dominate, ()),
                            ("metrics", cmd_metrics, ("csv",)),
                            ("export-dot", cmd_export_dot, ())):
        p = sub.add_parser(verb)
        _add_common(p, formats=("text", "json") + tuple(extra))
        _add_view(p)
        if verb == "export-dot":
            p.add_argument("--highlight", choices=("girth", "long-cycle"),
                           help="embolden a cycle witness in the DOT output")
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
