"""Halfspace restriction, class contraction, pc-minor closure, and the
forbidden-minor test that recognizes COM tope graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import (Graph, forbidden_minor, induced_subgraph, invariant_key,
                         is_isomorphic, make_graph)
from .partial_cube import PartialCubeStructure, require_structure

RESTRICT_PLUS = "restrict_plus"
RESTRICT_MINUS = "restrict_minus"
CONTRACT = "contract"


@dataclass(frozen=True)
class MinorOp:
    kind: str  # restrict_plus | restrict_minus | contract
    class_index: int

    def __str__(self) -> str:
        return f"{self.kind}({self.class_index})"


def restrict_with_map(s: PartialCubeStructure, class_index: int,
                      side: str) -> tuple[Graph, tuple[int, ...]]:
    """Halfspace restriction plus the old vertex id behind every new one."""
    if not 0 <= class_index < s.num_classes:
        raise ValueError(f"class index {class_index} out of range")
    if side not in ("+", "-"):
        raise ValueError("side must be '+' or '-'")
    minus, plus = s.halfspaces[class_index]
    keep = plus if side == "+" else minus
    return induced_subgraph(s.graph, keep)


def restrict(s: PartialCubeStructure, class_index: int, side: str) -> Graph:
    """Induced subgraph on one halfspace of a color class, densely re-indexed."""
    graph, _ = restrict_with_map(s, class_index, side)
    require_structure(graph)  # pc-minors of partial cubes are partial cubes
    return graph


def contract_with_map(s: PartialCubeStructure,
                      class_index: int) -> tuple[Graph, tuple[int, ...]]:
    """Contraction of a color class plus the new id of every old vertex."""
    if not 0 <= class_index < s.num_classes:
        raise ValueError(f"class index {class_index} out of range")
    n = s.graph.n_vertices
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in s.classes[class_index]:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(v) for v in range(n)})
    new_id = {r: i for i, r in enumerate(roots)}
    vertex_map = tuple(new_id[find(v)] for v in range(n))

    contracted_edges = set(s.classes[class_index])
    edges = set()
    for u, v in s.graph.edges:
        if (u, v) in contracted_edges:
            continue
        a, b = vertex_map[u], vertex_map[v]
        assert a != b, "contraction identified endpoints of a foreign class"
        edges.add((min(a, b), max(a, b)))
    return make_graph(len(roots), edges), vertex_map


def contract(s: PartialCubeStructure, class_index: int) -> Graph:
    graph, _ = contract_with_map(s, class_index)
    require_structure(graph)
    return graph


def apply_op(s: PartialCubeStructure, op: MinorOp) -> Graph:
    if op.kind == RESTRICT_PLUS:
        return restrict(s, op.class_index, "+")
    if op.kind == RESTRICT_MINUS:
        return restrict(s, op.class_index, "-")
    if op.kind == CONTRACT:
        return contract(s, op.class_index)
    raise ValueError(f"unknown minor operation {op.kind!r}")


def _closure(s: PartialCubeStructure):
    """Breadth-first enumeration of pc-minors up to isomorphism.

    Yields (graph, structure, ops) for one representative per isomorphism
    class, in breadth-first order over operation sequences; memoizes on the
    graph invariant key to avoid exponential revisiting.
    """
    buckets: dict[tuple, list[Graph]] = {}

    def is_new(graph: Graph) -> bool:
        bucket = buckets.setdefault(invariant_key(graph), [])
        if any(is_isomorphic(graph, seen) for seen in bucket):
            return False
        bucket.append(graph)
        return True

    queue: list[tuple[Graph, PartialCubeStructure, tuple[MinorOp, ...]]] = []
    is_new(s.graph)
    queue.append((s.graph, s, ()))
    head = 0
    while head < len(queue):
        graph, structure, ops = queue[head]
        head += 1
        yield graph, structure, ops
        for c in range(structure.num_classes):
            for op in (MinorOp(RESTRICT_PLUS, c), MinorOp(RESTRICT_MINUS, c),
                       MinorOp(CONTRACT, c)):
                child = apply_op(structure, op)
                if is_new(child):
                    queue.append((child, require_structure(child), ops + (op,)))


def pc_minors(s: PartialCubeStructure) -> list[Graph]:
    """All pc-minors of s up to isomorphism, the graph of s included."""
    return [graph for graph, _, _ in _closure(s)]


@dataclass(frozen=True)
class ComVerdict:
    is_com_tope_graph: bool
    witness: Graph | None = None
    witness_ops: tuple[MinorOp, ...] | None = None
    matched: tuple[str, int, int | None] | None = None  # (kind, n, m)


def is_com_tope_graph(s: PartialCubeStructure) -> ComVerdict:
    """Forbidden-minor characterization of COM tope graphs.

    A partial cube is the tope graph of a COM exactly when no pc-minor is
    isomorphic to a forbidden minor; candidate dimensions are capped by the
    number of color classes, since a minor never gains classes.
    """
    targets: list[tuple[tuple[str, int, int | None], Graph]] = []
    for n in range(4, s.num_classes + 1):
        targets.append((("minus_star", n, None), forbidden_minor("minus_star", n)))
        for m in range(1, n + 1):
            targets.append((("minus_minus", n, m), forbidden_minor("minus_minus", n, m)))
    if not targets:
        return ComVerdict(True)

    by_size: dict[int, list[tuple[tuple[str, int, int | None], Graph]]] = {}
    for named in targets:
        by_size.setdefault(named[1].n_vertices, []).append(named)

    for graph, _, ops in _closure(s):
        for name, target in by_size.get(graph.n_vertices, []):
            if is_isomorphic(graph, target):
                return ComVerdict(False, witness=graph, witness_ops=ops, matched=name)
    return ComVerdict(True)
