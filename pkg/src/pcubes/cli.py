"""Command-line interface.

Exit codes: 0 success, 1 reference mismatch in reproduce-appendix,
2 unreadable or unparseable input file, 3 input graph is not a partial cube.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .graph_core import (Graph, format_edge_list, forbidden_minor, hypercube,
                         parse_edge_list, path_graph)
from .oriented_complex import (CovectorSet, check_axioms, is_simple, parse_covectors,
                               sign_vector_string, tope_graph, topes)
from .partial_cube import (PartialCubeStructure, RecognitionFailure, build_structure)
from .pc_minor import is_com_tope_graph, pc_minors
from .reference import (REFERENCE_CASES, match_up_to_variable_permutation,
                        reference_case)
from .varchenko import build_matrix, determinant, factorize


@dataclass
class RunConfig:
    command: str
    graph_file: str | None = None
    generate: str | None = None
    covectors_file: str | None = None
    class_perm: list[int] | None = None
    vertex_perm: list[int] | None = None
    as_json: bool = False
    extended: bool = False
    case: str | None = None
    exact: bool = False


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _generate_graph(spec: str) -> Graph:
    parts = spec.split(":")
    name, args = parts[0], parts[1:]
    try:
        if name == "hypercube" and len(args) == 1:
            return hypercube(int(args[0]))
        if name == "path" and len(args) == 1:
            return path_graph(int(args[0]))
        if name == "minus_star" and len(args) == 1:
            return forbidden_minor("minus_star", int(args[0]))
        if name == "minus_minus" and len(args) == 2:
            return forbidden_minor("minus_minus", int(args[0]), int(args[1]))
    except ValueError as exc:
        raise CliError(f"bad generator arguments: {exc}", 2) from exc
    raise CliError(f"unknown generator {spec!r} "
                   "(use hypercube:n, minus_star:n, minus_minus:n:m, path:n)", 2)


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.generate:
        return _generate_graph(cfg.generate)
    assert cfg.graph_file is not None
    try:
        with open(cfg.graph_file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {cfg.graph_file}: {exc}", 2) from exc
    try:
        return parse_edge_list(text)
    except ValueError as exc:
        raise CliError(f"cannot parse {cfg.graph_file}: {exc}", 2) from exc


def _load_structure(cfg: RunConfig) -> PartialCubeStructure:
    result = build_structure(_load_graph(cfg))
    if isinstance(result, RecognitionFailure):
        raise CliError(f"not a partial cube: {result.reason} ({result.detail})", 3)
    return result


def _load_covectors(cfg: RunConfig) -> CovectorSet:
    assert cfg.covectors_file is not None
    try:
        with open(cfg.covectors_file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {cfg.covectors_file}: {exc}", 2) from exc
    try:
        return parse_covectors(text)
    except ValueError as exc:
        raise CliError(f"cannot parse {cfg.covectors_file}: {exc}", 2) from exc


def _label_string(s: PartialCubeStructure, v: int) -> str:
    return "".join("1" if s.labels[v] >> c & 1 else "0" for c in range(s.num_classes))


def _matrix_for(cfg: RunConfig, s: PartialCubeStructure):
    n = s.graph.n_vertices
    k = s.num_classes
    vo = cfg.vertex_perm
    cn = None
    if cfg.class_perm is not None:
        if sorted(cfg.class_perm) != list(range(1, k + 1)):
            raise CliError(f"--class-perm must list 1..{k} exactly once", 2)
        cn = [i - 1 for i in cfg.class_perm]
    if vo is not None and sorted(vo) != list(range(n)):
        raise CliError(f"--vertex-perm must list 0..{n - 1} exactly once", 2)
    return build_matrix(s, vertex_order=vo, class_names=cn)


# -- commands -----------------------------------------------------------------


def _cmd_generate(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if cfg.as_json:
        print(json.dumps({"n_vertices": g.n_vertices,
                          "edges": [list(e) for e in g.edges]}))
    else:
        sys.stdout.write(format_edge_list(g))
    return 0


def _cmd_check_pc(cfg: RunConfig) -> int:
    s = _load_structure(cfg)
    if cfg.as_json:
        print(json.dumps({"partial_cube": True, "vertices": s.graph.n_vertices,
                          "edges": len(s.graph.edges), "classes": s.num_classes}))
    else:
        print(f"partial cube: {s.graph.n_vertices} vertices, "
              f"{len(s.graph.edges)} edges, {s.num_classes} classes")
    return 0


def _cmd_classes(cfg: RunConfig) -> int:
    s = _load_structure(cfg)
    if cfg.as_json:
        payload = {
            "n_vertices": s.graph.n_vertices,
            "edges": [list(e) for e in s.graph.edges],
            "classes": [
                {
                    "index": c,
                    "edges": [list(e) for e in cls],
                    "halfspace_minus": sorted(s.halfspaces[c][0]),
                    "halfspace_plus": sorted(s.halfspaces[c][1]),
                }
                for c, cls in enumerate(s.classes)
            ],
            "labels": [_label_string(s, v) for v in range(s.graph.n_vertices)],
        }
        print(json.dumps(payload))
    else:
        for c, cls in enumerate(s.classes):
            edges = " ".join(f"({u},{v})" for u, v in cls)
            minus, plus = s.halfspaces[c]
            print(f"class {c}: edges {edges} | sides {len(minus)}/{len(plus)}")
    return 0


def _cmd_matrix(cfg: RunConfig) -> int:
    s = _load_structure(cfg)
    m = _matrix_for(cfg, s)
    rows = [[str(e) for e in row] for row in m.entries]
    if cfg.as_json:
        print(json.dumps({"vertex_order": list(m.vertex_order),
                          "class_names": [c + 1 for c in m.class_names],
                          "entries": rows}))
    else:
        for row in rows:
            print(", ".join(row))
    return 0


def _cmd_det(cfg: RunConfig) -> int:
    s = _load_structure(cfg)
    det = determinant(_matrix_for(cfg, s))
    if cfg.as_json:
        print(json.dumps({"determinant": str(det)}))
    else:
        print(det)
    return 0


def _cmd_factor(cfg: RunConfig) -> int:
    s = _load_structure(cfg)
    det = determinant(_matrix_for(cfg, s))
    report = factorize(det, s.num_classes)
    if cfg.as_json:
        print(json.dumps(report.as_json_dict()))
    else:
        for classes, b in report.factors:
            body = "*".join(f"x{i + 1}" for i in sorted(classes))
            print(f"factor (1 - ({body})^2)^{b}")
        print(f"residual {report.residual}")
        print(f"clean {'true' if report.clean else 'false'}")
    return 0


def _cmd_minors(cfg: RunConfig) -> int:
    s = _load_structure(cfg)
    reps = pc_minors(s)
    sizes = sorted(g.n_vertices for g in reps)
    if cfg.as_json:
        print(json.dumps({"count": len(reps), "sizes": sizes}))
    else:
        print(f"isomorphism classes: {len(reps)}")
        print("sizes: " + " ".join(str(n) for n in sizes))
    return 0


def _cmd_com_check(cfg: RunConfig) -> int:
    if cfg.covectors_file is not None:
        return _com_check_covectors(cfg)
    s = _load_structure(cfg)
    verdict = is_com_tope_graph(s)
    if cfg.as_json:
        payload: dict = {"com_tope_graph": verdict.is_com_tope_graph}
        if not verdict.is_com_tope_graph:
            kind, n, m = verdict.matched
            payload["witness"] = {
                "kind": kind, "n": n, "m": m,
                "vertices": verdict.witness.n_vertices,
                "ops": [str(op) for op in verdict.witness_ops],
            }
        print(json.dumps(payload))
    else:
        if verdict.is_com_tope_graph:
            print("COM tope graph: yes")
        else:
            kind, n, m = verdict.matched
            name = f"{kind} n={n}" + (f" m={m}" if m is not None else "")
            print("COM tope graph: no")
            print(f"witness: {name} ({verdict.witness.n_vertices} vertices)")
            ops = " -> ".join(str(op) for op in verdict.witness_ops) or "(the graph itself)"
            print(f"derivation: {ops}")
    return 0


def _com_check_covectors(cfg: RunConfig) -> int:
    l = _load_covectors(cfg)
    ax = check_axioms(l)
    simple = is_simple(l)
    t = topes(l)
    g = tope_graph(l)
    sresult = build_structure(g)
    is_pc = not isinstance(sresult, RecognitionFailure)
    if cfg.as_json:
        payload = {
            "covectors": len(l.vectors),
            "ground_size": l.ground_size,
            "axioms": "COM" if ax.ok else ax.axiom,
            "witness": None if ax.ok else [
                sign_vector_string(w) if isinstance(w, tuple) else w
                for w in ax.witness
            ],
            "simple": simple,
            "topes": len(t),
            "tope_graph": {
                "vertices": g.n_vertices,
                "edges": len(g.edges),
                "partial_cube": is_pc,
                "classes": sresult.num_classes if is_pc else None,
            },
        }
        print(json.dumps(payload))
    else:
        print(f"covectors: {len(l.vectors)} over ground set of {l.ground_size}")
        if ax.ok:
            print("axioms: COM")
        else:
            witness = ", ".join(
                sign_vector_string(w) if isinstance(w, tuple) else f"e={w}"
                for w in ax.witness)
            print(f"axioms: {ax.axiom} violated at {witness}")
        print(f"simple: {'yes' if simple else 'no'}")
        print(f"topes: {len(t)}")
        if is_pc:
            print(f"tope graph: {g.n_vertices} vertices, {len(g.edges)} edges, "
                  f"partial cube with {sresult.num_classes} classes")
        else:
            print(f"tope graph: {g.n_vertices} vertices, {len(g.edges)} edges, "
                  f"not a partial cube ({sresult.reason})")
    return 0


def _run_reference_case(case, class_perm: list[int] | None, exact: bool):
    from .partial_cube import require_structure

    s = require_structure(case.graph())
    cn = [i - 1 for i in class_perm] if class_perm else None
    m = build_matrix(s, class_names=cn)
    det = determinant(m)
    report = factorize(det, s.num_classes)
    if exact:
        expected = case.determinant_poly(m.ring)
        ok = det == expected
        detail = "exact string match" if ok else "determinant differs"
        return ok, detail, report
    perm = match_up_to_variable_permutation(report, case, m.ring)
    ok = perm is not None
    detail = (f"matches under variable permutation {[p + 1 for p in perm]}"
              if ok else "no variable permutation matches")
    return ok, detail, report


def _cmd_reproduce(cfg: RunConfig) -> int:
    cases = [c for c in REFERENCE_CASES if cfg.extended or not c.extended]
    if cfg.case is not None:
        try:
            cases = [reference_case(cfg.case)]
        except KeyError as exc:
            raise CliError(str(exc), 2) from exc
    if cfg.exact and (cfg.case is None or cfg.class_perm is None):
        raise CliError("--exact needs --case and --class-perm", 2)

    results = []
    all_ok = True
    for case in cases:
        ok, detail, report = _run_reference_case(
            case, cfg.class_perm if cfg.exact else None, cfg.exact)
        all_ok &= ok
        results.append((case, ok, detail, report))

    if cfg.as_json:
        print(json.dumps({
            "cases": [
                {"name": case.name, "pass": ok, "detail": detail,
                 "report": report.as_json_dict()}
                for case, ok, detail, report in results
            ],
            "all_pass": all_ok,
        }))
    else:
        for case, ok, detail, _ in results:
            print(f"{'PASS' if ok else 'FAIL'} {case.name}: {detail}")
    return 0 if all_ok else 1


_COMMANDS = {
    "generate": _cmd_generate,
    "check-pc": _cmd_check_pc,
    "classes": _cmd_classes,
    "matrix": _cmd_matrix,
    "det": _cmd_det,
    "factor": _cmd_factor,
    "minors": _cmd_minors,
    "com-check": _cmd_com_check,
    "reproduce-appendix": _cmd_reproduce,
}

_GRAPH_COMMANDS = {"generate", "check-pc", "classes", "matrix", "det", "factor",
                   "minors"}


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated int list: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcubes",
        description="Partial cubes, pc-minors, sign-vector complexes, and exact "
                    "Varchenko determinants.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        if name != "reproduce-appendix":
            source = p.add_mutually_exclusive_group(required=True)
            source.add_argument("--graph", metavar="FILE",
                                help="edge-list file ('n <count>' then '<u> <v>' lines)")
            source.add_argument("--generate", metavar="NAME[:ARGS]",
                                help="hypercube:n, minus_star:n, minus_minus:n:m, path:n")
            if name == "com-check":
                source.add_argument("--covectors", metavar="FILE",
                                    help="one sign vector per line over 0+-")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name in ("matrix", "det", "factor"):
            p.add_argument("--class-perm", type=_int_list, metavar="i,j,...",
                           help="1-based variable number for each class")
            p.add_argument("--vertex-perm", type=_int_list, metavar="i,j,...",
                           help="0-based vertex for each matrix row")
        if name == "reproduce-appendix":
            p.add_argument("--extended", action="store_true",
                           help="include the five-class (up to 30x30) cases")
            p.add_argument("--case", metavar="NAME", help="run a single named case")
            p.add_argument("--exact", action="store_true",
                           help="require exact string equality (needs --case and --class-perm)")
            p.add_argument("--class-perm", type=_int_list, metavar="i,j,...",
                           help="1-based variable number for each class")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        graph_file=getattr(args, "graph", None),
        generate=getattr(args, "generate", None),
        covectors_file=getattr(args, "covectors", None),
        class_perm=getattr(args, "class_perm", None),
        vertex_perm=getattr(args, "vertex_perm", None),
        as_json=args.json,
        extended=getattr(args, "extended", False),
        case=getattr(args, "case", None),
        exact=getattr(args, "exact", False),
    )
    try:
        return _COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
