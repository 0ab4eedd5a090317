"""Command-line interface.

Exit codes: 0 ok, 1 input error, 2 resource budget exhausted, 3 property
false, 4 infeasible parameter.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .constructions import (ConstructionError, InfeasibleParameter, complete_labeling, g_family,
                            h_family, unique_li6, wheel_labeling)
from .graphs import (Graph, GraphError, LabeledGraph, export_dot, read_graph_file,
                     write_graph6, write_labeled)
from .iso import are_isomorphic, canonical_form
from .links import admits_labeling, corollary_conditions, corollary_discrepancies, necessary_report
from .solver import (INF, SearchBudgetExceeded, check_labeling, enumerate_graphs, eta,
                     is_cut_irregular)
from .verification import DEFAULT_MAX_ORDER, SUITE_VERSION, run_suite

OK, INPUT_ERROR, RESOURCES, PROPERTY_FALSE, INFEASIBLE_PARAMETER = 0, 1, 2, 3, 4

log = logging.getLogger("linklabel")


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not resource exhaustion
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path: str) -> Graph | LabeledGraph:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return read_graph_file(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _graph(obj) -> Graph:
    return obj.graph if isinstance(obj, LabeledGraph) else obj


def _eta_json(value):
    return "infinity" if value == INF else value


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


# --------------------------------------------------------------------------

def cmd_eta(args) -> int:
    g = _graph(_read(args.path))
    try:
        res = eta(g, node_budget=args.node_budget, max_labels=args.max_labels)
    except SearchBudgetExceeded as exc:
        _emit(args, {"graph": write_graph6(g), "status": "budget-exhausted"},
              f"eta: search stopped ({exc})")
        return RESOURCES
    payload = {"graph": write_graph6(g), "order": g.order, "size": g.size,
               "eta": _eta_json(res.value),
               "evidence": res.evidence, "method": res.method, "nodes": res.nodes,
               "pair": list(res.pair) if res.pair else None, "witness": None}
    if res.value is None:
        payload["status"] = "label-bound-reached"
        _emit(args, payload, f"eta > {args.max_labels} (stopped at --max-labels)")
        return RESOURCES
    if res.value == INF:
        x, y = res.pair
        text = f"eta = infinity (links isomorphic on equal edge sets: vertices {x},{y})"
    else:
        text = f"eta = {res.value}"
        if res.witness is not None:
            out = Path(args.out) if args.out else Path(args.path + ".witness.lbl")
            _write(out, write_labeled(res.witness))
            payload["witness"] = str(out)
            text += f"\nwitness written to {out}"
    _emit(args, payload, text)
    return OK


def cmd_check(args) -> int:
    lg = _read(args.path)
    if not isinstance(lg, LabeledGraph):
        raise InputError("check needs a labeled edge-list file")
    res = check_labeling(lg)
    payload = {"valid": res.valid, "labels": lg.num_labels(),
               "pair": list(res.pair) if res.pair else None}
    if res.valid:
        _emit(args, payload, f"valid: link-irregular with {lg.num_labels()} labels")
        return OK
    x, y = res.pair
    _emit(args, payload, f"invalid: vertices {x},{y} have isomorphic labeled links")
    return PROPERTY_FALSE


def cmd_feasible(args) -> int:
    g = _graph(_read(args.path))
    rep = admits_labeling(g)
    nec = necessary_report(g)
    lit = corollary_conditions(g)
    payload = {"feasible": rep.feasible, "reason": rep.reason,
               "pair": list(rep.witness_pair) if rep.witness_pair else None,
               "necessary": {"distinct_neighborhoods": nec.distinct_neighborhoods,
                             "empty_link_counts": {str(k): v for k, v in
                                                   nec.empty_link_counts.items()},
                             "holds": nec.holds},
               "active_neighborhood_criterion": lit.feasible}
    if rep.feasible:
        text = "feasible: some labeling is link-irregular"
    else:
        x, y = rep.witness_pair
        text = f"infeasible: {rep.reason} (vertices {x},{y})"
    if lit.feasible != rep.feasible:
        text += "\nnote: the active-neighbourhood criterion disagrees"
    _emit(args, payload, text)
    return OK if rep.feasible else PROPERTY_FALSE


def _construct(kind: str, n: int | None):
    """(file text, suffix, summary) for one construction, validated."""
    if kind == "li6":
        g = unique_li6()
        lg = g.with_labels(1)
    elif n is None:
        raise InputError(f"construct {kind} needs a parameter n")
    elif kind == "kn":
        lg = complete_labeling(n)
    elif kind == "wheel":
        lg = wheel_labeling(n)
    elif kind == "hn":
        _, lg = h_family(n)
    elif kind == "gn":
        if n < 6:
            raise InfeasibleParameter(f"no cut-irregular graph has {n} vertices")
        g = g_family(n)
        if not is_cut_irregular(g):
            raise ConstructionError(f"G_{n} failed validation")
        return write_graph6(g) + "\n", ".g6", f"G_{n}: {g.order} vertices, {g.size} edges"
    else:
        raise InputError(f"unknown kind {kind}")
    if not check_labeling(lg):
        raise ConstructionError(f"{kind} {n} failed validation")
    summary = f"{kind} {n if n is not None else ''}".strip()
    return (write_labeled(lg), ".lbl",
            f"{summary}: {lg.order} vertices, {lg.graph.size} edges, {lg.num_labels()} labels")


def cmd_construct(args) -> int:
    try:
        text, suffix, summary = _construct(args.kind, args.n)
    except InfeasibleParameter as exc:
        print(f"infeasible parameter: {exc}", file=sys.stderr)
        return INFEASIBLE_PARAMETER
    except GraphError as exc:
        raise InputError(str(exc)) from exc
    name = args.kind + ("" if args.n is None or args.kind == "li6" else str(args.n))
    out = Path(args.out) if args.out else Path(name + suffix)
    _write(out, text)
    _emit(args, {"kind": args.kind, "n": args.n, "file": str(out), "summary": summary},
          f"{summary}\nwritten to {out}")
    return OK


def cmd_iso(args) -> int:
    a, b = _read(args.a), _read(args.b)
    if isinstance(a, LabeledGraph) != isinstance(b, LabeledGraph):
        a, b = _graph(a), _graph(b)
    same = are_isomorphic(a, b)
    payload = {"isomorphic": same, "certificates": [canonical_form(a).data.decode(),
                                                    canonical_form(b).data.decode()]}
    _emit(args, payload, "isomorphic" if same else "not isomorphic")
    return OK if same else PROPERTY_FALSE


def cmd_dot(args) -> int:
    obj = _read(args.path)
    lg = obj if isinstance(obj, LabeledGraph) else obj.with_labels(1)
    text = export_dot(lg, args.name)
    if args.out:
        _write(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return OK


def _survey_graphs(args) -> list[Graph]:
    if not args.paths:
        return [g for n in range(1, args.max_order + 1) for g in enumerate_graphs(n)]
    graphs = []
    for path in args.paths:
        try:
            lines = Path(path).read_text().splitlines()
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        if any(line.strip().startswith("n ") for line in lines):
            graphs.append(_graph(_read(path)))
            continue
        for line in lines:
            if line.strip() and not line.startswith(">>"):
                try:
                    graphs.append(read_graph_file(line))
                except GraphError as exc:
                    raise InputError(f"{path}: {exc}") from exc
    return graphs


def cmd_survey(args) -> int:
    graphs = _survey_graphs(args)
    entries = []
    timing = []
    status = OK
    wdir = Path(args.witness_dir) if args.witness_dir else None
    for i, g in enumerate(graphs):
        start = time.perf_counter()
        entry = {"graph": write_graph6(g), "order": g.order, "size": g.size,
                 "feasible": admits_labeling(g).feasible, "eta": None, "witness": None}
        try:
            res = eta(g, node_budget=args.node_budget, max_labels=args.max_labels)
        except SearchBudgetExceeded:
            res = None
            status = RESOURCES
        if res is not None and res.value is not None:
            entry["eta"] = _eta_json(res.value)
            if res.witness is not None:
                if wdir:
                    path = wdir / f"{i:05d}.lbl"
                    _write(path, write_labeled(res.witness))
                    entry["witness"] = path.name
                else:
                    entry["witness"] = [[u, v, lab] for (u, v), lab in
                                        sorted(res.witness.labels.items())]
        elif res is not None:
            status = RESOURCES
        entries.append(entry)
        timing.append(round(time.perf_counter() - start, 4))
        log.info("%s eta=%s", entry["graph"], entry["eta"])
    report = {"suite": SUITE_VERSION, "entries": entries,
              "discrepancies": corollary_discrepancies([g for g in graphs if g.order >= 2]),
              "timing": {"entries": timing}}
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        _write(Path(args.out), text + "\n")
    if args.format == "json" and not args.out:
        print(text)
    else:
        finite = sum(e["eta"] not in (None, "infinity") for e in entries)
        print(f"surveyed {len(entries)} graphs: {finite} feasible, "
              f"{len(report['discrepancies'])} criterion discrepancies")
    return status


def cmd_verify_paper(args) -> int:
    fixtures = Path(args.fixtures) if args.fixtures else None

    def progress(outcome):
        if args.format == "text":
            print(outcome.line(), flush=True)
            if not outcome.passed:
                print("  " + json.dumps(outcome.details, sort_keys=True), flush=True)

    report = run_suite(args.max_order, fixtures, progress)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        _write(Path(args.out), text + "\n")
    if args.format == "json":
        print(text)
    else:
        failed = [c["name"] for c in report["checks"] if not c["passed"]]
        print(f"{len(report['checks']) - len(failed)}/{len(report['checks'])} checks passed"
              + (f"; failing: {', '.join(failed)}" if failed else ""))
    return OK if report["passed"] else PROPERTY_FALSE


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="output file")
    common.add_argument("--verbose", "-v", action="count", default=0)
    search = _Parser(add_help=False)
    search.add_argument("--max-labels", type=int, help="stop searching above this many labels")
    search.add_argument("--node-budget", type=int, help="abort after this many search nodes")

    p = _Parser(prog="linklabel",
                                description="Link-irregular labelings of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eta", parents=[common, search], help="labeling number of a graph")
    s.add_argument("path")
    s.set_defaults(func=cmd_eta)

    s = sub.add_parser("check", parents=[common], help="validate a labeled graph")
    s.add_argument("path")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("feasible", parents=[common], help="does any labeling work")
    s.add_argument("path")
    s.set_defaults(func=cmd_feasible)

    s = sub.add_parser("construct", parents=[common], help="write an explicit construction")
    s.add_argument("kind", choices=("kn", "wheel", "hn", "gn", "li6"))
    s.add_argument("n", type=int, nargs="?")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("iso", parents=[common], help="isomorphism test")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("dot", parents=[common], help="Graphviz export")
    s.add_argument("path")
    s.add_argument("--name", default="G")
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("survey", parents=[common, search],
                       help="eta over graph files or all graphs up to --max-order")
    s.add_argument("paths", nargs="*")
    s.add_argument("--max-order", type=int, default=5)
    s.add_argument("--witness-dir")
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("verify-paper", parents=[common], help="run the verification suite")
    s.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    s.add_argument("--fixtures", help="directory with the figure data files")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "max_order", None) is not None and args.max_order > 8:
        print("error: --max-order is limited to 8", file=sys.stderr)
        return INPUT_ERROR
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (ConstructionError, AssertionError) as exc:
        print(f"internal validation failed: {exc}", file=sys.stderr)
        return PROPERTY_FALSE


if __name__ == "__main__":
    sys.exit(main())
