"""Undirected graphs, hypercube-family generators, and small-graph isomorphism."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

UNREACHABLE = math.inf

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n_vertices-1.

    Edges are stored sorted with the smaller endpoint first, so equal graphs
    compare equal and iteration order is deterministic.
    """

    n_vertices: int
    edges: tuple[Edge, ...]


def make_graph(n_vertices: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n_vertices < 0:
        raise ValueError("vertex count must be non-negative")
    normalized: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise ValueError(f"edge ({u},{v}) has an endpoint out of range")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(n_vertices, tuple(sorted(normalized)))


def adjacency(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def distances(g: Graph) -> list[list[float]]:
    """All-pairs shortest path lengths by BFS; UNREACHABLE marks disconnection."""
    adj = adjacency(g)
    n = g.n_vertices
    table: list[list[float]] = []
    for s in range(n):
        d: list[float] = [UNREACHABLE] * n
        d[s] = 0
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if d[w] == UNREACHABLE:
                        d[w] = level
                        nxt.append(w)
            frontier = nxt
        table.append(d)
    return table


def is_connected(g: Graph) -> bool:
    if g.n_vertices == 0:
        return False
    adj = adjacency(g)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n_vertices


def bipartition(g: Graph) -> list[int] | None:
    """2-coloring per connected component, or None if an odd cycle exists."""
    adj = adjacency(g)
    color = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def hypercube(n: int) -> Graph:
    """Vertex i is the n-bit string of i; edges join strings at Hamming distance 1."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    edges = []
    for i in range(1 << n):
        for b in range(n):
            j = i ^ (1 << b)
            if i < j:
                edges.append((i, j))
    return make_graph(1 << n, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the kept vertices, densely re-indexed.

    Returns the new graph together with the old id of every new vertex.
    """
    old_ids = tuple(sorted(set(keep)))
    index = {old: new for new, old in enumerate(old_ids)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return make_graph(len(old_ids), edges), old_ids


def forbidden_minor(kind: str, n: int, m: int | None = None) -> Graph:
    """A member of the forbidden pc-minor family obtained from the n-cube.

    Both kinds delete the antipode of the base vertex v (the all-zeros
    string).  ``minus_star`` additionally deletes one neighbor of v;
    ``minus_minus`` deletes v itself and its m lowest-coordinate neighbors.
    """
    if n < 4:
        raise ValueError("forbidden pc-minors need dimension n >= 4")
    antipode = (1 << n) - 1
    if kind == "minus_star":
        if m is not None:
            raise ValueError("minus_star takes no neighbor count")
        removed = {antipode, 1}
    elif kind == "minus_minus":
        if m is None or not 0 < m <= n:
            raise ValueError("minus_minus needs 0 < m <= n")
        removed = {antipode, 0} | {1 << b for b in range(m)}
    else:
        raise ValueError(f"unknown forbidden minor kind: {kind!r}")
    keep = [v for v in range(1 << n) if v not in removed]
    graph, _ = induced_subgraph(hypercube(n), keep)
    return graph


# -- isomorphism ------------------------------------------------------------


def _refined_colors(adjs: list[list[list[int]]]) -> list[list[int]]:
    """Joint color refinement over several graphs; colors are comparable across them."""
    colorings = [[len(a) for a in adj] for adj in adjs]
    while True:
        signature_ids: dict[tuple, int] = {}
        new_colorings = []
        changed = False
        for adj, colors in zip(adjs, colorings):
            new = []
            for v, nbrs in enumerate(adj):
                sig = (colors[v], tuple(sorted(colors[w] for w in nbrs)))
                if sig not in signature_ids:
                    signature_ids[sig] = len(signature_ids)
                new.append(signature_ids[sig])
            new_colorings.append(new)
        for old, new in zip(colorings, new_colorings):
            if len(set(old)) != len(set(new)):
                changed = True
        colorings = new_colorings
        if not changed:
            return colorings


def invariant_key(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint used to bucket candidate graphs."""
    adj = adjacency(g)
    colors = _refined_colors([adj])[0]
    histogram: dict[int, int] = {}
    for c in colors:
        histogram[c] = histogram.get(c, 0) + 1
    return (g.n_vertices, len(g.edges), tuple(sorted(histogram.values())),
            tuple(sorted(len(a) for a in adj)))


def isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """An edge-preserving vertex bijection g -> h, or None if none exists."""
    if g.n_vertices != h.n_vertices or len(g.edges) != len(h.edges):
        return None
    adj_g = adjacency(g)
    adj_h = adjacency(h)
    colors_g, colors_h = _refined_colors([adj_g, adj_h])
    if sorted(colors_g) != sorted(colors_h):
        return None

    n = g.n_vertices
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors_h):
        by_color.setdefault(c, []).append(v)

    # map vertices in an order that keeps the mapped region connected where possible
    order: list[int] = []
    seen = [False] * n
    pending = sorted(range(n), key=lambda v: (len(by_color.get(colors_g[v], [])), v))
    for start in pending:
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in adj_g[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    set_h = [set(a) for a in adj_h]
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in by_color.get(colors_g[u], []):
            if used[v]:
                continue
            ok = True
            for w in adj_g[u]:
                if w in mapping and mapping[w] not in set_h[v]:
                    ok = False
                    break
            if ok and len(adj_g[u]) == len(adj_h[v]):
                mapping[u] = v
                used[v] = True
                if extend(pos + 1):
                    return True
                del mapping[u]
                used[v] = False
        return False

    if extend(0):
        edge_image = {(min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                      for u, v in g.edges}
        if edge_image != set(h.edges):
            return None
        return dict(mapping)
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Read the edge-list format: ``n <count>`` then ``<u> <v>`` lines, # comments."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected 'n <vertex count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<u> <v>'")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("missing 'n <vertex count>' header line")
    return make_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n_vertices}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
